#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "homequiv/pencil.hpp"

namespace homequiv {

// Certificate document: one "key: value" line per field, always in this order.
//
//   format                    homequiv-certificate 1
//   vars                      comma-separated variable names
//   verdict                   equivalent | hypothesis-not-met | not-equivalent
//   hypothesis                equal | different | degree-mismatch
//   n, d                      variable count, degree of f
//   f, g                      canonical polynomial text (g is the pencil endpoint)
//   original_g                g before substitution, or "none"
//   substitution              rows joined by ';', entries by ',', or "none"
//   m                         dim (J_f)_d
//   generic_rank              rank of the coordinate matrix away from E's roots
//   exceptional               E(t) as text, or "none"
//   exceptional_coefficients  exact coefficients of t^0..t^deg, space-separated
//   path                      direct | detour | none
//   detour_height             exact height of the detour leg (0 if direct)
//   waypoints                 exact points of C, space-separated
//   segment_root_counts       zeros of E per segment, space-separated
//   condition_a, condition_b  true | false
//
// Exact scalars are written as "p/q" or "p/q+r/s*i" and contain no spaces.

using CertificateFields = std::vector<std::pair<std::string, std::string>>;

CertificateFields certificate_fields(const EquivalenceCertificate& cert, const std::vector<std::string>& vars);

void write_certificate(std::ostream& os, const EquivalenceCertificate& cert, const std::vector<std::string>& vars);

struct LoadedCertificate {
  EquivalenceCertificate cert;
  std::vector<std::string> vars;
};

/// Inverse of write_certificate. Throws ParseError on malformed documents.
LoadedCertificate read_certificate(std::istream& is);

const char* to_string(JacobianComparison c);

}  // namespace homequiv
