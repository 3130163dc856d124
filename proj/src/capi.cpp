#include "ordertype.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ot/bound.hpp"
#include "ot/classical.hpp"
#include "ot/generators.hpp"
#include "ot/order_type.hpp"
#include "ot/orientation.hpp"
#include "ot/pointfile.hpp"
#include "ot/suk.hpp"

struct ot_seq {
  ot::PointSequence seq;
};
struct ot_result {
  ot::ExtractionResult res;
};
struct ot_bound {
  ot::BoundValue bound;
};

namespace {

thread_local std::string g_last_error;

ot_status status_of(ot::ErrorCode code) {
  using ot::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidInput:
      return OT_ERR_INVALID;
    case ErrorCode::DegenerateInput:
      return OT_ERR_DEGENERATE;
    case ErrorCode::BudgetExceeded:
      return OT_ERR_BUDGET;
    case ErrorCode::RetriesExhausted:
      return OT_ERR_RETRIES;
    case ErrorCode::InsufficientInput:
      return OT_ERR_INSUFFICIENT;
    case ErrorCode::ParseError:
      return OT_ERR_PARSE;
    case ErrorCode::ProjectionRepairFailed:
      return OT_ERR_REPAIR;
    case ErrorCode::InternalInvariantViolation:
      return OT_ERR_INTERNAL;
  }
  return OT_ERR_INTERNAL;
}

template <typename Fn>
ot_status guarded(Fn&& fn) {
  try {
    fn();
    return OT_OK;
  } catch (const ot::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return OT_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int gp_state_int(const ot::GpStatus& st) {
  switch (st.state) {
    case ot::GpState::Verified:
      return 0;
    case ot::GpState::Unverified:
      return 1;
    case ot::GpState::Degenerate:
      return 2;
  }
  return 1;
}

std::vector<std::size_t> copy_indices(const size_t* idx, size_t n) {
  ot::require(idx != nullptr || n == 0, ot::ErrorCode::InvalidInput,
              "null index list");
  return std::vector<std::size_t>(idx, idx + n);
}

}  // namespace

extern "C" {

const char* ot_last_error(void) { return g_last_error.c_str(); }

void ot_string_free(char* s) { ::free(s); }
void ot_seq_free(ot_seq* seq) { delete seq; }
void ot_result_free(ot_result* res) { delete res; }
void ot_bound_free(ot_bound* bound) { delete bound; }

ot_status ot_seq_parse(const char* text, ot_seq** out) {
  return guarded([&] {
    ot::require(text && out, ot::ErrorCode::InvalidInput, "null argument");
    auto* handle = new ot_seq{ot::parse_point_file(text)};
    *out = handle;
  });
}

ot_status ot_seq_serialize(const ot_seq* seq, char** out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    *out = dup_string(ot::serialize_point_file(seq->seq));
  });
}

size_t ot_seq_dim(const ot_seq* seq) { return seq ? seq->seq.dim : 0; }
size_t ot_seq_size(const ot_seq* seq) { return seq ? seq->seq.size() : 0; }

ot_status ot_seq_coord(const ot_seq* seq, size_t point, size_t axis,
                       char** out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    ot::require(point < seq->seq.size() && axis < seq->seq.dim,
                ot::ErrorCode::InvalidInput, "coordinate out of range");
    *out = dup_string(ot::to_string(seq->seq[point].coords[axis]));
  });
}

ot_status ot_seq_coord_double(const ot_seq* seq, size_t point, size_t axis,
                              double* out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    ot::require(point < seq->seq.size() && axis < seq->seq.dim,
                ot::ErrorCode::InvalidInput, "coordinate out of range");
    *out = seq->seq[point].coords[axis].get_d();
  });
}

ot_status ot_seq_validate(ot_seq* seq, int* state, char** witness) {
  return guarded([&] {
    ot::require(seq && state, ot::ErrorCode::InvalidInput, "null argument");
    seq->seq.status = ot::validate_general_position(seq->seq);
    *state = gp_state_int(seq->seq.status);
    if (witness) {
      *witness = seq->seq.status.state == ot::GpState::Degenerate
                     ? dup_string(seq->seq.status.witness.describe())
                     : nullptr;
    }
  });
}

ot_status ot_gen_moment(size_t dim, size_t count, const char* t_start,
                        const char* t_step, ot_seq** out) {
  return guarded([&] {
    ot::require(out != nullptr, ot::ErrorCode::InvalidInput, "null argument");
    ot::Rational start = t_start ? ot::parse_rational(t_start)
                                 : ot::Rational(1);
    ot::Rational step = t_step ? ot::parse_rational(t_step) : ot::Rational(1);
    *out = new ot_seq{ot::gen_moment(dim, count, start, step)};
  });
}

ot_status ot_gen_es_monotone(size_t n, ot_seq** out) {
  return guarded([&] {
    ot::require(out != nullptr, ot::ErrorCode::InvalidInput, "null argument");
    ot::PointSequence seq;
    seq.dim = 1;
    for (const ot::Rational& v : ot::gen_es_monotone(n))
      seq.points.push_back(ot::Point{{v}});
    seq.status = ot::validate_general_position(seq, 0);
    if (seq.status.state == ot::GpState::Unverified)
      seq.status.state = ot::GpState::Verified;  // distinct reals
    *out = new ot_seq{std::move(seq)};
  });
}

ot_status ot_gen_es_capcup(size_t n, ot_seq** out) {
  return guarded([&] {
    ot::require(out != nullptr, ot::ErrorCode::InvalidInput, "null argument");
    *out = new ot_seq{ot::gen_es_capcup(n)};
  });
}

ot_status ot_gen_random(size_t dim, size_t count, uint64_t seed,
                        const char* bound, ot_seq** out) {
  return guarded([&] {
    ot::require(out != nullptr, ot::ErrorCode::InvalidInput, "null argument");
    ot::Integer b(1000000);
    if (bound) {
      try {
        b = ot::Integer(std::string(bound), 10);
      } catch (const std::invalid_argument&) {
        throw ot::Error(ot::ErrorCode::ParseError,
                        std::string("malformed bound '") + bound + "'");
      }
    }
    *out = new ot_seq{ot::gen_random(dim, count, seed, b)};
  });
}

ot_status ot_analyze(const ot_seq* seq, uint64_t budget, unsigned threads,
                     ot_analysis* out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    ot::PointSequence work = seq->seq;
    work.status = ot::validate_general_position(work);
    ot::require(work.status.state != ot::GpState::Degenerate,
                ot::ErrorCode::DegenerateInput,
                "degenerate input: " + work.status.witness.describe());
    ot::OrderTypeSignature sig = ot::signature(
        work, budget ? budget : ot::kDefaultTupleBudget,
        threads ? threads : 1);
    out->dim = work.dim;
    out->n_points = work.size();
    out->plus_tuples = sig.plus_count();
    out->minus_tuples = sig.minus_count();
    out->homogeneous =
        (out->plus_tuples == 0 || out->minus_tuples == 0) ? 1 : 0;
    out->sign = out->minus_tuples == 0 ? 1 : -1;
    out->gp_state = gp_state_int(work.status);
  });
}

ot_status ot_extract(const ot_seq* seq, ot_algo algo, size_t target,
                     ot_result** out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    ot::PointSequence work = seq->seq;
    work.status = ot::validate_general_position(work);
    ot::require(work.status.state != ot::GpState::Degenerate,
                ot::ErrorCode::DegenerateInput,
                "degenerate input: " + work.status.witness.describe());
    ot::ExtractionResult res;
    switch (algo) {
      case OT_ALGO_AUTO:
      case OT_ALGO_SUK:
        res = ot::suk_extract(work, target);
        break;
      case OT_ALGO_BRUTE:
        res = ot::brute_force_max_homogeneous(work);
        break;
      case OT_ALGO_MONOTONE: {
        ot::require(work.dim == 1, ot::ErrorCode::InvalidInput,
                    "monotone extraction needs dimension 1");
        std::vector<ot::Rational> values;
        for (const ot::Point& p : work.points)
          values.push_back(p.coords[0]);
        res = ot::monotone_extract(values, target);
        break;
      }
      case OT_ALGO_CUPCAP:
        res = ot::cupcap_extract(work, target);
        break;
      default:
        throw ot::Error(ot::ErrorCode::InvalidInput, "unknown algorithm");
    }
    *out = new ot_result{std::move(res)};
  });
}

size_t ot_result_size(const ot_result* res) {
  return res ? res->res.size() : 0;
}
size_t ot_result_index(const ot_result* res, size_t i) {
  return res && i < res->res.size() ? res->res.indices[i] : SIZE_MAX;
}
int ot_result_sign(const ot_result* res) {
  return res ? ot::to_int(res->res.sign) : 0;
}
int ot_result_verified(const ot_result* res) {
  return res && res->res.verified ? 1 : 0;
}
const char* ot_result_algorithm(const ot_result* res) {
  return res ? res->res.algorithm.c_str() : "";
}

ot_status ot_check_homogeneous(const ot_seq* seq, const size_t* idx,
                               size_t n, int* homogeneous, int* sign,
                               char** counterexample) {
  return guarded([&] {
    ot::require(seq && homogeneous && sign, ot::ErrorCode::InvalidInput,
                "null argument");
    auto rep = ot::is_homogeneous(seq->seq, copy_indices(idx, n));
    *homogeneous = rep.homogeneous ? 1 : 0;
    *sign = ot::to_int(rep.sign);
    if (counterexample) {
      *counterexample = nullptr;
      if (!rep.homogeneous) {
        std::string s = "{";
        for (std::size_t i = 0; i < rep.tuple_a.size(); ++i)
          s += (i ? "," : "") + std::to_string(rep.tuple_a[i]);
        s += "} vs {";
        for (std::size_t i = 0; i < rep.tuple_b.size(); ++i)
          s += (i ? "," : "") + std::to_string(rep.tuple_b[i]);
        s += "}";
        *counterexample = dup_string(s);
      }
    }
  });
}

ot_status ot_check_convex_position(const ot_seq* seq, const size_t* idx,
                                   size_t n, int* out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    *out = ot::convex_position_check(seq->seq, copy_indices(idx, n)) ? 1 : 0;
  });
}

ot_status ot_check_cyclic_polytope(const ot_seq* seq, const size_t* idx,
                                   size_t n, int* out) {
  return guarded([&] {
    ot::require(seq && out, ot::ErrorCode::InvalidInput, "null argument");
    *out = ot::cyclic_polytope_check(seq->seq, copy_indices(idx, n)) ? 1 : 0;
  });
}

ot_status ot_guarantee_threshold(unsigned long dim, unsigned long target,
                                 ot_bound** out) {
  return guarded([&] {
    ot::require(out != nullptr, ot::ErrorCode::InvalidInput, "null argument");
    *out = new ot_bound{ot::guarantee_threshold(dim, target)};
  });
}

int ot_bound_kind(const ot_bound* bound) {
  if (!bound) return -1;
  switch (bound->bound.kind) {
    case ot::BoundValue::Kind::Exact:
      return 0;
    case ot::BoundValue::Kind::PowerOfTwo:
      return 1;
    case ot::BoundValue::Kind::Tower:
      return 2;
  }
  return -1;
}

ot_status ot_bound_render(const ot_bound* bound, char** out) {
  return guarded([&] {
    ot::require(bound && out, ot::ErrorCode::InvalidInput, "null argument");
    *out = dup_string(bound->bound.render());
  });
}

}  // extern "C"
