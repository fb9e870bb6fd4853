#pragma once

#include "ldcode/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ldcode {

enum class FamilyKind { path, cycle, wheel, complete, star, complete_bipartite, bistar };

/// A named family member: order-parameterised kinds use `n`, the two
/// two-parameter kinds (complete_bipartite, bistar) use `r` and `s`.
///
/// Labelling conventions:
///  - path / cycle: 0-1-...-(n-1) (and back to 0 for the cycle)
///  - wheel: rim cycle on 0..n-2, hub n-1
///  - star K_{1,n-1}: centre 0, leaves 1..n-1
///  - complete_bipartite K_{r,s}: sides 0..r-1 and r..r+s-1
///  - bistar K_2(r,s): centre 0 with leaves 1..r-1, centre r with leaves r+1..r+s-1, centres joined
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;
    int r = 0;
    int s = 0;

    static FamilySpec of_order(FamilyKind kind, int n) { return {kind, n, 0, 0}; }
    static FamilySpec of_sides(FamilyKind kind, int r, int s) { return {kind, r + s, r, s}; }

    [[nodiscard]] bool two_parameter() const
    {
        return kind == FamilyKind::complete_bipartite || kind == FamilyKind::bistar;
    }
    [[nodiscard]] int order() const { return two_parameter() ? r + s : n; }
    /// "P_7", "K_{3,4}", "K_2(3,5)", ...
    [[nodiscard]] std::string name() const;
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

/// Builds the family graph. Accepts the smallest orders for which the graph is
/// defined and connected (path n>=1, cycle n>=3, wheel n>=4, complete n>=1,
/// star n>=2, 1<=r<=s for the two-parameter kinds).
Graph generate_family(const FamilySpec& spec);

} // namespace ldcode
