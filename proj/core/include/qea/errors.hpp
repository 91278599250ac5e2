// errors.hpp: error hierarchy shared by the whole library.
//
// parse_error / domain_error come from bad user input (CLI exit code 2),
// invariant_error marks a broken internal invariant (CLI exit code 3).
#ifndef QEA_ERRORS_HPP
#define QEA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qea {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (scalar literals, relation expressions,
// presentation files). `where` is a 0-based offset into the offending
// string when known, npos otherwise.
struct parse_error : error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t where;
  explicit parse_error(const std::string& msg, std::size_t pos = npos)
      : error(pos == npos ? msg : msg + " (at offset " + std::to_string(pos) + ")"),
        where(pos) {}
};

// Well-formed input that violates a precondition (pole at a specialization,
// inhomogeneous commutator operand, unknown parameter...).
struct domain_error : error {
  using error::error;
};

// A broken internal invariant; never the user's fault.
struct invariant_error : error {
  using error::error;
};

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw invariant_error(what);
}

}  // namespace qea

#endif
