#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace immcalc {

// Input could not be tokenized or parsed; offset is a byte position into the source.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t offset)
        : std::runtime_error(message), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A well-formed expression or command that violates a construction rule
// (connected sum of open manifolds, product over a connected sum, ...).
class semantic_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The query is syntactically and semantically fine but the catalog lacks the
// data needed to answer it (e.g. integral Chern classes of RP^n for n >= 3).
class unsupported_query : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace immcalc
