#pragma once

#include <json.hpp>

#include "shalika/cosets.hpp"
#include "shalika/linalg.hpp"
#include "shalika/oracle.hpp"
#include "shalika/subspace.hpp"
#include "shalika/symgrp.hpp"

namespace shalika {

// Documented wire schemas. Matrices travel as
//   {"p": int, "rows": int, "cols": int, "entries": [[int, ...], ...]}
// with entries already reduced to [0, p); subspaces as
//   {"p": int, "ambient": int, "basis": [[int, ...], ...]}
// with the basis guaranteed RREF; permutations as bare 1-based image arrays.
// Readers validate strictly and throw std::invalid_argument on any deviation.

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Permutation& s);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CosetLabel& label); // {"k": int, "l": int}

nlohmann::json to_json(const Decomposition& d);

nlohmann::json to_json(const oracle::CertifyReport& r);

} // namespace shalika
