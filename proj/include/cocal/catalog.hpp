#pragma once

#include "cocal/lie.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cocal {

// Symbolic member of the classification tables: family token plus parameters.
struct AlgebraId {
    std::string family;
    std::vector<Rat> params;

    std::string str() const;
    friend bool operator==(const AlgebraId& a, const AlgebraId& b) = default;
};

// Dimension of a family (3, 4 or 5); throws on unknown family.
int family_dim(const std::string& family);

// Range checks per family; throws std::invalid_argument on violation.
void validate(const AlgebraId& id);

LieAlgebra instantiate(const AlgebraId& id);

// "A_{4,9}^{-1/2}", "r3mu^{1/2}", "e(1,1)", "h3+R" (alias of "h3R"), ...
AlgebraId parse(const std::string& name);

// "A_{4,8}+e(1,1)" -> (4d id, 3d id); also accepts 5d+r2 pairs such as
// "R5+r2", signalled by the second id having family "r2".
std::pair<AlgebraId, AlgebraId> parse_pair(const std::string& name);

struct Fixture {
    AlgebraId id;
    std::vector<int> h;                       // tabulated cohomology vector
    bool unimodular;
    std::vector<std::string> kernel_classes;  // tabulated ideal classes (4d only)
    int comm_dim;                             // dim [g,g]
    std::vector<int> last_col;                // h1(g)+h1(u)-h2(g), per listed u
};

// Every catalog row instantiated over the parameter sweep grid.
std::vector<Fixture> catalog_fixtures();

// Parameter grid used by fixtures and the classification sweep.
std::vector<std::vector<Rat>> param_grid(const std::string& family);

// Human-readable parameter range of a family ("" when parameter-free).
std::string param_range(const std::string& family);

// Optional replacement grids, keyed by family token.
using ParamOverride = std::map<std::string, std::vector<std::vector<Rat>>>;

// All 3d / 4d ids over the grid (for sweeps).
std::vector<AlgebraId> all_3d_ids(const ParamOverride* ov = nullptr);
std::vector<AlgebraId> all_4d_ids(const ParamOverride* ov = nullptr);

// Tabulated adapted coframes for the three exceptional pairs, exact in
// Q(sqrt(5)) / Q(sqrt(10)): A_{4,8}+e(1,1), A_{4,12}+r3mu^1, r2r2+r3mu^1.
std::optional<std::vector<KForm<Quad>>> table3_example(const AlgebraId& g4, const AlgebraId& g3);

}  // namespace cocal
