#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qbil {

// Every recoverable failure in the library carries one of these codes.
// Verification layers map them onto report statuses; the CLI maps them
// onto exit codes.
enum class errc {
  illegal_demotion,
  exact_infinite_product,
  indeterminate_product,
  pole_encountered,
  pole_in_term,
  non_convergent,
  divergent_domain,
  sigma_degenerate,
  no_contraction,
  certification_too_tight,
  degenerate_point,
  sampling_exhausted,
  unknown_map,
  symbol_missing,
  invalid_spec,
  parse_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::illegal_demotion: return "IllegalDemotion";
    case errc::exact_infinite_product: return "ExactInfiniteProduct";
    case errc::indeterminate_product: return "IndeterminateProduct";
    case errc::pole_encountered: return "PoleEncountered";
    case errc::pole_in_term: return "PoleInTerm";
    case errc::non_convergent: return "NonConvergent";
    case errc::divergent_domain: return "DivergentDomain";
    case errc::sigma_degenerate: return "SigmaDegenerate";
    case errc::no_contraction: return "NoContraction";
    case errc::certification_too_tight: return "CertificationTooTight";
    case errc::degenerate_point: return "DegeneratePoint";
    case errc::sampling_exhausted: return "SamplingExhausted";
    case errc::unknown_map: return "UnknownMap";
    case errc::symbol_missing: return "SymbolMissing";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace qbil
