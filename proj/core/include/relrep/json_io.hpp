#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>

#include "relrep/fock.hpp"
#include "relrep/intertwiner.hpp"
#include "relrep/minkowski.hpp"
#include "relrep/state.hpp"

namespace relrep {

using Json = nlohmann::json;

/// Complex scalars as [re, im]; matrices as row-major arrays of them.
Json to_json(const Complex& z);
Json to_json(const Matrix& m);
Json to_json(const FourVector& p);
Matrix matrix_from_json(const Json& j);
Complex complex_from_json(const Json& j);
FourVector four_vector_from_json(const Json& j);

/// StateVector terms as {p, sigma, species, amp}; species are stored by
/// name, so reading one back needs a name -> descriptor registry.
Json to_json(const StateVector& s);
StateVector state_from_json(const Json& j,
                            const std::map<std::string, SpeciesDescriptor>& species);

/// {kind, momentum ("standard" or [t,x,y,z]), rep, entries (row-major)}.
Json to_json(const CoefficientTensor& t);
CoefficientTensor coefficient_tensor_from_json(const Json& j);

/// Structured view of normal-ordered operator sums (terms with coeff,
/// deltas, creators, annihilators).
Json to_json(const OperatorSum& e);

}  // namespace relrep
