#include "ot/orientation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ot/tuples.hpp"

namespace ot {

Sign bareiss_det_sign(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Sign::Positive;
  int swap_sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t pivot = k;
      while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
      if (pivot == n) return Sign::Zero;
      std::swap(m[k], m[pivot]);
      swap_sign = -swap_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign_from_int(sgn(m[n - 1][n - 1]) * swap_sign);
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  int swap_sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t pivot = k;
      while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(m[k], m[pivot]);
      swap_sign = -swap_sign;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return swap_sign > 0 ? det : Rational(-det);
}

Sign orientation(std::span<const Point> points, std::size_t dim) {
  require(points.size() == dim + 1, ErrorCode::InvalidInput,
          "orientation needs exactly d+1 points");
  for (const Point& p : points)
    require(p.dim() == dim, ErrorCode::InvalidInput,
            "point dimension mismatch");

  // Integer matrix: column j is the j-th point in homogeneous coordinates,
  // scaled by the (positive) lcm of its denominators. Positive column
  // scaling leaves the determinant sign alone.
  const std::size_t n = dim + 1;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Integer l(1);
    for (std::size_t i = 0; i < dim; ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              points[j].coords[i].get_den_mpz_t());
    m[0][j] = l;
    for (std::size_t i = 0; i < dim; ++i) {
      const Rational& c = points[j].coords[i];
      m[i + 1][j] = c.get_num() * (l / c.get_den());
    }
  }
  return bareiss_det_sign(std::move(m));
}

Sign orientation_of(const PointSequence& seq,
                    std::span<const std::size_t> idx) {
  std::vector<Point> pts;
  pts.reserve(idx.size());
  for (std::size_t i : idx) {
    require(i < seq.size(), ErrorCode::InvalidInput, "index out of range");
    pts.push_back(seq[i]);
  }
  return orientation(pts, seq.dim);
}

GpStatus validate_general_position(const PointSequence& seq,
                                   std::size_t exhaustive_cap) {
  require(seq.size() > 0, ErrorCode::InvalidInput, "empty sequence");
  const std::size_t n = seq.size();
  const std::size_t d = seq.dim;

  // Hyperplane degeneracies are reported ahead of shared coordinates.
  if (n <= exhaustive_cap && n > d) {
    GpStatus st;
    st.state = GpState::Verified;
    for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& idx) {
      if (orientation_of(seq, idx) == Sign::Zero) {
        st.state = GpState::Degenerate;
        st.witness.kind = DegeneracyWitness::Kind::Hyperplane;
        st.witness.indices = idx;
        return false;
      }
      return true;
    });
    if (st.state == GpState::Degenerate) return st;
  }

  // Coordinate projections must be injective on every axis.
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return seq[a].coords[axis] < seq[b].coords[axis];
    });
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (seq[order[i]].coords[axis] == seq[order[i + 1]].coords[axis]) {
        GpStatus st;
        st.state = GpState::Degenerate;
        st.witness.kind = DegeneracyWitness::Kind::SharedCoordinate;
        st.witness.indices = {std::min(order[i], order[i + 1]),
                              std::max(order[i], order[i + 1])};
        st.witness.axis = axis;
        return st;
      }
    }
  }

  GpStatus st;
  st.state = (n <= d || n <= exhaustive_cap) ? GpState::Verified
                                             : GpState::Unverified;
  return st;
}

PointSequence positive_linear_transform(
    const PointSequence& seq,
    const std::vector<std::vector<Rational>>& matrix, const Point& shift) {
  const std::size_t d = seq.dim;
  require(matrix.size() == d && shift.dim() == d, ErrorCode::InvalidInput,
          "transform dimension mismatch");
  for (const auto& row : matrix)
    require(row.size() == d, ErrorCode::InvalidInput,
            "transform matrix is not square");
  require(sgn(rational_det(matrix)) > 0, ErrorCode::InvalidInput,
          "transform determinant must be positive");

  PointSequence out;
  out.dim = d;
  out.status = seq.status;
  out.points.reserve(seq.size());
  for (const Point& p : seq.points) {
    Point q;
    q.coords.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational acc = shift.coords[i];
      for (std::size_t j = 0; j < d; ++j) acc += matrix[i][j] * p.coords[j];
      q.coords[i] = acc;
    }
    out.points.push_back(std::move(q));
  }
  // Shifts and positive-determinant maps preserve every orientation, but a
  // verified status also promises coordinate distinctness, which a general
  // matrix can break.
  if (seq.status.state == GpState::Verified) {
    GpStatus st = validate_general_position(out);
    if (st.state == GpState::Unverified) st.state = GpState::Verified;
    out.status = st;
  }
  return out;
}

}  // namespace ot
