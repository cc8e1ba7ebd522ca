#pragma once

#include "mhopf/combination.hpp"
#include "mhopf/decoration.hpp"
#include "mhopf/shuffle.hpp"

namespace mhopf {

// F * G: sum over (k,l)-shuffles s and C in FM_s(M(F), M(G)) of M^{-1}(C).
LinComb star(const Forest& f, const Forest& g, const DecorationRegistry& registry);
LinComb star(const LinComb& a, const LinComb& b, const DecorationRegistry& registry);

// Quasi-shuffle version, each C weighted by lambda^{k+l-max(s)}.
LinComb star_lambda(const Forest& f, const Forest& g, const DecorationRegistry& registry,
                    const Poly& lambda = Poly::lambda());
LinComb star_lambda(const LinComb& a, const LinComb& b, const DecorationRegistry& registry,
                    const Poly& lambda = Poly::lambda());

// <F, G> = delta_{F,G}, extended bilinearly; pairing2 pairs factorwise.
Poly pairing(const LinComb& a, const LinComb& b);
Poly pairing2(const TensorLinComb& t, const TensorLinComb& u);

// |{I in V(H) : H_I = F, H_{V(H)\I} = G}| by brute force over subsets.
// Throws DomainError above 64 vertices.
Integer n_count(const Forest& f, const Forest& g, const Forest& h);

}  // namespace mhopf
