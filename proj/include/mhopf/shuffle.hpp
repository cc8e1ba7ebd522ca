#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mhopf/decoration.hpp"
#include "mhopf/matrix.hpp"

namespace mhopf {

// A (k,l)-shuffle in one-line notation: sigma[i] is the 1-based row of C
// receiving row i of A (i < k) or row i-k of B (i >= k).
struct Shuffle {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::size_t> sigma;

  // Throws DomainError unless sigma is a permutation increasing on both blocks.
  Shuffle(std::size_t k, std::size_t l, std::vector<std::size_t> sigma);

  std::string text() const;  // "(213)"
  friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

// Like Shuffle but sigma is a surjection onto 1..m; a row of A and a row of B
// may share a target.
struct QuasiShuffle {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::size_t> sigma;

  QuasiShuffle(std::size_t k, std::size_t l, std::vector<std::size_t> sigma);

  std::size_t m() const;  // max(sigma)
  std::string text() const;
  friend bool operator==(const QuasiShuffle&, const QuasiShuffle&) = default;
};

// Lexicographic in sigma.
std::vector<Shuffle> shuffles(std::size_t k, std::size_t l);
// Decreasing m (the plain shuffles first), lexicographic within.
std::vector<QuasiShuffle> quasi_shuffles(std::size_t k, std::size_t l);

// Representable matrices C with k+l rows carrying A and B at the rows chosen
// by sigma. Free cells range over {h, r}. Sorted by printed matrix. Throws
// DomainError if A or B is not representable or the sizes do not match.
std::vector<ForestMatrix> fm_sigma(const ForestMatrix& a, const ForestMatrix& b, const Shuffle& sigma,
                                   const DecorationRegistry& registry);

// Same with max(sigma) rows; merged rows need equal X decorations.
std::vector<ForestMatrix> fm_sigma_quasi(const ForestMatrix& a, const ForestMatrix& b, const QuasiShuffle& sigma,
                                         const DecorationRegistry& registry);

}  // namespace mhopf
