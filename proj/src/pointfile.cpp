#include "ot/pointfile.hpp"

#include <fstream>
#include <sstream>

#include "ot/orientation.hpp"

namespace ot {

PointSequence parse_point_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  PointSequence seq;
  bool have_dim = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (!have_dim) {
      std::string tag;
      unsigned long d = 0;
      fields >> tag >> d;
      require(tag == "dim" && d >= 1 && !fields.fail(),
              ErrorCode::ParseError,
              "line " + std::to_string(lineno) +
                  ": expected header 'dim <d>'");
      seq.dim = d;
      have_dim = true;
      continue;
    }
    Point p;
    std::string tok;
    while (fields >> tok) p.coords.push_back(parse_rational(tok));
    require(p.dim() == seq.dim, ErrorCode::ParseError,
            "line " + std::to_string(lineno) + ": expected " +
                std::to_string(seq.dim) + " coordinates, got " +
                std::to_string(p.dim()));
    seq.points.push_back(std::move(p));
  }
  require(have_dim, ErrorCode::ParseError, "missing 'dim <d>' header");
  require(!seq.points.empty(), ErrorCode::ParseError, "no points in file");
  seq.status.state = GpState::Unverified;
  return seq;
}

std::string serialize_point_file(const PointSequence& seq) {
  std::ostringstream out;
  out << "dim " << seq.dim << "\n";
  for (const Point& p : seq.points) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (j) out << ' ';
      out << to_string(p.coords[j]);
    }
    out << '\n';
  }
  return out.str();
}

PointSequence load_point_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_file(buf.str());
}

void save_point_file(const PointSequence& seq, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::ParseError, "cannot write '" + path + "'");
  out << serialize_point_file(seq);
}

}  // namespace ot
