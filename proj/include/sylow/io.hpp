#pragma once

#include <json.hpp>
#include <string>

#include "sylow/actions.hpp"
#include "sylow/charexpr.hpp"
#include "sylow/generators.hpp"
#include "sylow/treefn.hpp"

namespace sylow {

using json = nlohmann::json;

// {"p":5,"k":3,"labels":{"":5,"1":5,"1,3":1,...}} with comma-separated
// addresses; the empty key is the root.  Trivial components have k = 0 and an
// empty label map.
json tree_to_json(const TreeFn& t);
TreeFn tree_from_json(const json& j);

// {"p":5,"n":19,"components":[...]}
json ntree_to_json(const NTreeFn& t);
NTreeFn ntree_from_json(const json& j);

// accepts either of the two forms above and returns an n-level tuple
// (a bare tree becomes the single component of n = p^k)
NTreeFn any_tree_from_json(const json& j);

std::string address_to_string(const Address& a);
Address address_from_string(const std::string& s);

json cyclotomic_to_json(const Cyclotomic& v);

json generators_to_json(const GeneratorSet& gs);

json counterexample_to_json(const CounterexampleReport& rep);

// One node per skeleton address, label rendered above the vertex.
std::string tree_to_dot(const TreeFn& t);
std::string ntree_to_dot(const NTreeFn& t);

// "sigma:i,j,l" | "galois:m" | "rho:y:xi,zeta,..."
ActionGen parse_action_gen(const std::string& spec);

}  // namespace sylow
