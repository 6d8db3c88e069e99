#pragma once

#include <string>
#include <vector>

#include "htt/base.hpp"

namespace htt::fincat {

/// Object of Theta_n: the level-0 object is terminal; a level-n object is
/// [m](c_1,...,c_m) with each c_i of level n-1. Theta_1 = Delta.
struct ThetaObject {
    int level = 0;
    std::vector<ThetaObject> children; // size m; empty for level 0 or [0]

    int m() const { return static_cast<int>(children.size()); }
    friend bool operator==(const ThetaObject&, const ThetaObject&) = default;
};

/// Morphism (delta, {f_ij}): delta is order-preserving [m] -> [p]; the block
/// f_ij : c_i -> d_j is present exactly when delta(i-1) < j <= delta(i).
/// blocks[i-1] lists f_ij for j in (delta(i-1), delta(i)] in order.
struct ThetaMorphism {
    int level = 0;
    std::vector<int> delta; // values delta(0..m), monotone, into {0..p}
    std::vector<std::vector<ThetaMorphism>> blocks; // per i = 1..m

    friend bool operator==(const ThetaMorphism&, const ThetaMorphism&) = default;
};

/// Validates the (delta, {f_ij}) shape of f against endpoints a -> b.
bool theta_valid(const ThetaMorphism& f, const ThetaObject& a, const ThetaObject& b);

/// Complete enumeration of Hom(a, b); requires equal levels.
std::vector<ThetaMorphism> theta_hom(const ThetaObject& a, const ThetaObject& b);

ThetaMorphism theta_identity(const ThetaObject& a);

/// Composition by delta-composition with block pasting.
ThetaMorphism theta_compose(const ThetaMorphism& g, const ThetaMorphism& f,
                            const ThetaObject& a, const ThetaObject& b,
                            const ThetaObject& c);

std::string theta_print(const ThetaObject& a);
ThetaObject theta_parse(const std::string& text);

} // namespace htt::fincat
