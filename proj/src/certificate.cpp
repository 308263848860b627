#include "homequiv/certificate.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "homequiv/errors.hpp"
#include "homequiv/text.hpp"

namespace homequiv {

namespace {

constexpr const char* kFormat = "homequiv-certificate 1";

const std::vector<std::string>& field_order() {
  static const std::vector<std::string> order{
      "format",      "vars",         "verdict",       "hypothesis",   "n",
      "d",           "f",            "g",             "original_g",   "substitution",
      "m",           "generic_rank", "exceptional",   "exceptional_coefficients",
      "path",        "detour_height", "waypoints",    "segment_root_counts",
      "condition_a", "condition_b"};
  return order;
}

std::string join_vars(const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < vars.size(); ++k) out += (k ? "," : "") + vars[k];
  return out;
}

std::string join_scalars(const std::vector<Scalar>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? " " : "") + values[k].to_string();
  return out;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

bool parse_bool(const std::string& v, std::size_t at) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ParseError(at, "expected true or false, got '" + v + "'");
}

std::size_t parse_count(const std::string& v, std::size_t at) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(at, "expected a non-negative integer, got '" + v + "'");
  }
  return std::stoul(v);
}

}  // namespace

const char* to_string(JacobianComparison c) {
  switch (c) {
    case JacobianComparison::equal:
      return "equal";
    case JacobianComparison::different:
      return "different";
    case JacobianComparison::degree_mismatch:
      return "degree-mismatch";
  }
  return "unknown";
}

CertificateFields certificate_fields(const EquivalenceCertificate& cert, const std::vector<std::string>& vars) {
  CertificateFields out;
  out.emplace_back("format", kFormat);
  out.emplace_back("vars", join_vars(vars));
  out.emplace_back("verdict", to_string(cert.verdict));
  out.emplace_back("hypothesis", to_string(cert.hypothesis));
  out.emplace_back("n", std::to_string(cert.f.nvars()));
  out.emplace_back("d", std::to_string(cert.f.degree()));
  out.emplace_back("f", to_string(cert.f, vars));
  out.emplace_back("g", to_string(cert.g, vars));
  out.emplace_back("original_g", cert.original_g ? to_string(*cert.original_g, vars) : "none");
  if (cert.substitution) {
    std::string rows;
    const Mat& u = cert.substitution->entries();
    for (std::size_t r = 0; r < u.rows(); ++r) {
      if (r) rows += ';';
      for (std::size_t c = 0; c < u.cols(); ++c) rows += (c ? "," : "") + u(r, c).to_string();
    }
    out.emplace_back("substitution", rows);
  } else {
    out.emplace_back("substitution", "none");
  }
  out.emplace_back("m", std::to_string(cert.m));
  out.emplace_back("generic_rank", std::to_string(cert.generic_rank));
  const bool decided = cert.verdict == Verdict::equivalent;
  out.emplace_back("exceptional", decided ? cert.exceptional.to_string() : "none");
  out.emplace_back("exceptional_coefficients", decided ? join_scalars(cert.exceptional.coefficients()) : "");
  if (cert.path) {
    out.emplace_back("path", cert.path->detour ? "detour" : "direct");
    out.emplace_back("detour_height", cert.path->height.get_str());
    out.emplace_back("waypoints", join_scalars(cert.path->waypoints));
    std::string counts;
    for (std::size_t k = 0; k < cert.path->segment_root_counts.size(); ++k) {
      counts += (k ? " " : "") + std::to_string(cert.path->segment_root_counts[k]);
    }
    out.emplace_back("segment_root_counts", counts);
  } else {
    out.emplace_back("path", "none");
    out.emplace_back("detour_height", "0");
    out.emplace_back("waypoints", "");
    out.emplace_back("segment_root_counts", "");
  }
  out.emplace_back("condition_a", cert.condition_a ? "true" : "false");
  out.emplace_back("condition_b", cert.condition_b ? "true" : "false");
  return out;
}

void write_certificate(std::ostream& os, const EquivalenceCertificate& cert, const std::vector<std::string>& vars) {
  for (const auto& [key, value] : certificate_fields(cert, vars)) {
    os << key << ':';
    if (!value.empty()) os << ' ' << value;
    os << '\n';
  }
}

LoadedCertificate read_certificate(std::istream& is) {
  CertificateFields fields;
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (std::string line; std::getline(is, line);) {
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(here, "expected 'key: value'");
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    fields.emplace_back(line.substr(0, colon), value);
    offsets.push_back(here);
  }
  const auto& order = field_order();
  if (fields.size() != order.size()) throw ParseError(offset, "certificate has the wrong number of fields");
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (fields[k].first != order[k]) throw ParseError(offsets[k], "expected field '" + order[k] + "'");
  }
  auto value = [&](std::size_t k) -> const std::string& { return fields[k].second; };
  if (value(0) != kFormat) throw ParseError(offsets[0], "unsupported certificate format");

  LoadedCertificate out;
  out.vars = split_vars(value(1));
  EquivalenceCertificate& cert = out.cert;

  const std::string& verdict = value(2);
  if (verdict == "equivalent") {
    cert.verdict = Verdict::equivalent;
  } else if (verdict == "hypothesis-not-met") {
    cert.verdict = Verdict::hypothesis_not_met;
  } else if (verdict == "not-equivalent") {
    cert.verdict = Verdict::not_equivalent;
  } else {
    throw ParseError(offsets[2], "unknown verdict '" + verdict + "'");
  }
  const std::string& hyp = value(3);
  if (hyp == "equal") {
    cert.hypothesis = JacobianComparison::equal;
  } else if (hyp == "different") {
    cert.hypothesis = JacobianComparison::different;
  } else if (hyp == "degree-mismatch") {
    cert.hypothesis = JacobianComparison::degree_mismatch;
  } else {
    throw ParseError(offsets[3], "unknown hypothesis outcome '" + hyp + "'");
  }

  const std::size_t n = parse_count(value(4), offsets[4]);
  if (n != out.vars.size()) throw ParseError(offsets[4], "n does not match vars");
  const auto d = static_cast<unsigned>(parse_count(value(5), offsets[5]));
  auto poly = [&](std::size_t k) {
    HomPoly p = parse_poly(value(k), out.vars);
    return p.is_zero() ? HomPoly(n, d) : p;
  };
  cert.f = poly(6);
  cert.g = poly(7);
  if (value(8) != "none") cert.original_g = poly(8);
  if (value(9) != "none") {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : split_on(value(9), ';')) {
      std::vector<Scalar> entries;
      for (const auto& e : split_on(row, ',')) entries.push_back(parse_scalar(e));
      rows.push_back(std::move(entries));
    }
    cert.substitution = LinearMap(Mat::from_rows(rows));
  }
  cert.m = parse_count(value(10), offsets[10]);
  cert.generic_rank = parse_count(value(11), offsets[11]);
  if (value(12) != "none") {
    std::vector<Scalar> coeffs;
    for (const auto& tok : split_ws(value(13))) coeffs.push_back(parse_scalar(tok));
    cert.exceptional = UniPoly(std::move(coeffs));
  }
  if (value(14) != "none") {
    PathCertificate path;
    if (value(14) != "direct" && value(14) != "detour") throw ParseError(offsets[14], "unknown path kind");
    path.detour = value(14) == "detour";
    path.height = parse_scalar(value(15)).re();
    for (const auto& tok : split_ws(value(16))) path.waypoints.push_back(parse_scalar(tok));
    for (const auto& tok : split_ws(value(17))) path.segment_root_counts.push_back(parse_count(tok, offsets[17]));
    cert.path = std::move(path);
  }
  cert.condition_a = parse_bool(value(18), offsets[18]);
  cert.condition_b = parse_bool(value(19), offsets[19]);
  return out;
}

}  // namespace homequiv
