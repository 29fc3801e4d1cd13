#ifndef DERGRAPH_ERROR_HPP
#define DERGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dergraph {

// Categories map to CLI exit codes: parse -> 1, cap_exceeded -> 2, intransitive -> 3.
enum class Errc {
  parse,
  cap_exceeded,
  intransitive,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

} // namespace dergraph

#endif
