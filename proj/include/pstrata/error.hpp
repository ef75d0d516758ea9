#ifndef PSTRATA_ERROR_HPP
#define PSTRATA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pstrata {

// Machine-readable error codes; the CLI maps these to the "error" object
// and exit code 1.
enum class ErrCode {
    parse,           // syntax error in polynomial / matrix-entry text
    unknown_variable,
    bad_coefficient, // literal not representable in the coefficient field
    ring_mismatch,
    dimension_mismatch,
    budget,          // Groebner step/degree budget exhausted
    cap_exceeded,    // group order / subgroup enumeration cap
    domain,          // generic precondition violation
    overflow,        // exponent overflow
    invalid_structure,
    internal,        // consistency failure that indicates a bug
};

const char* err_code_name(ErrCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrCode code, std::string msg, long position = -1)
        : std::runtime_error(std::move(msg)), code_(code), position_(position) {}

    ErrCode code() const { return code_; }
    // byte offset for parse errors, -1 otherwise
    long position() const { return position_; }

  private:
    ErrCode code_;
    long position_;
};

} // namespace pstrata

#endif
