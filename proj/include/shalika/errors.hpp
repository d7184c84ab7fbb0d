#pragma once

#include <stdexcept>

namespace shalika {

// Inverting or factoring through a matrix of deficient rank.
class singular_matrix_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A mandatory post-condition check failed; indicates a bug, never bad input.
class verification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace shalika
