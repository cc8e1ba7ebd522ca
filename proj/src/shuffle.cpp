#include "mhopf/shuffle.hpp"

#include <algorithm>
#include <optional>

#include "mhopf/error.hpp"

namespace mhopf {

namespace {

std::string one_line(const std::vector<std::size_t>& sigma) {
  const bool wide = std::any_of(sigma.begin(), sigma.end(), [](std::size_t v) { return v > 9; });
  std::string out = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out + ")";
}

void check_blocks(std::size_t k, std::size_t l, const std::vector<std::size_t>& sigma) {
  if (sigma.size() != k + l)
    throw DomainError("shuffle " + one_line(sigma) + " must have " + std::to_string(k + l) + " entries");
  for (std::size_t i = 0; i + 1 < k + l; ++i)
    if (i + 1 != k && sigma[i] >= sigma[i + 1])
      throw DomainError("shuffle " + one_line(sigma) + " is not increasing on both blocks");
}

// Every value in 1..m is hit.
bool is_surjective(const std::vector<std::size_t>& sigma, std::size_t m) {
  std::vector<bool> hit(m + 1, false);
  for (auto v : sigma) {
    if (v == 0 || v > m) return false;
    hit[v] = true;
  }
  return std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

// The completion search over the strictly upper cells of an m-row matrix.
class Completion {
 public:
  Completion(std::size_t m, const DecorationRegistry& registry)
      : m_(m), registry_(registry), labels_(m), fixed_(m * m) {}

  // False on a conflicting assignment.
  bool set_label(std::size_t row, const Decoration& d) {
    if (labels_[row]) return *labels_[row] == d && d.is_x();
    labels_[row] = d;
    return true;
  }

  bool fix(std::size_t i, std::size_t j, EntryKind k) {
    auto& slot = fixed_[i * m_ + j];
    if (slot && *slot != k) return false;
    slot = k;
    return true;
  }

  std::vector<ForestMatrix> run() {
    // X rows are all r to the right.
    for (std::size_t i = 0; i < m_; ++i)
      if (labels_[i]->is_x())
        for (std::size_t j = i + 1; j < m_; ++j)
          if (!fix(i, j, EntryKind::R)) return {};
    current_ = ForestMatrix(m_, Decoration{});
    for (std::size_t i = 0; i < m_; ++i) current_.at(i, 0) = MatrixEntry::dec(*labels_[i]);
    for (std::size_t j = 1; j < m_; ++j)
      for (std::size_t i = j; i-- > 0;) order_.emplace_back(i, j);
    search(0);
    std::sort(results_.begin(), results_.end(),
              [](const ForestMatrix& a, const ForestMatrix& b) { return print_matrix(a) < print_matrix(b); });
    return std::move(results_);
  }

 private:
  // Cells are filled column by column, rows descending, so assigning (i,k)
  // completes exactly the triples (i,j,k) with i<j<k.
  void search(std::size_t step) {
    if (step == order_.size()) {
      if (is_representable(current_, registry_)) results_.push_back(current_);
      return;
    }
    const auto [i, k] = order_[step];
    for (EntryKind kind : {EntryKind::H, EntryKind::R}) {
      const auto& f = fixed_[i * m_ + k];
      if (f && *f != kind) continue;
      current_.rel(i, k) = MatrixEntry{kind, {}};
      if (triples_ok(i, k)) search(step + 1);
    }
  }

  bool triples_ok(std::size_t i, std::size_t k) const {
    const bool ik = current_.rel(i, k).kind == EntryKind::H;
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool ij = current_.rel(i, j).kind == EntryKind::H;
      const bool jk = current_.rel(j, k).kind == EntryKind::H;
      if (!(ij ? (jk ? ik : true) : !ik)) return false;
    }
    return true;
  }

  std::size_t m_;
  const DecorationRegistry& registry_;
  std::vector<std::optional<Decoration>> labels_;
  std::vector<std::optional<EntryKind>> fixed_;
  std::vector<std::pair<std::size_t, std::size_t>> order_;
  ForestMatrix current_;
  std::vector<ForestMatrix> results_;
};

void check_inputs(const ForestMatrix& a, const ForestMatrix& b, std::size_t k, std::size_t l,
                  const DecorationRegistry& registry) {
  if (a.rows() != k || b.rows() != l)
    throw DomainError("shuffle sizes (" + std::to_string(k) + "," + std::to_string(l) + ") do not match matrices with " +
                      std::to_string(a.rows()) + " and " + std::to_string(b.rows()) + " rows");
  if (auto r = is_representable(a, registry); !r)
    throw DomainError(std::string("left matrix is not forest-representable: condition (") + r.condition + ")");
  if (auto r = is_representable(b, registry); !r)
    throw DomainError(std::string("right matrix is not forest-representable: condition (") + r.condition + ")");
}

std::vector<ForestMatrix> complete(const ForestMatrix& a, const ForestMatrix& b, const std::vector<std::size_t>& sigma,
                                   std::size_t m, const DecorationRegistry& registry) {
  const std::size_t k = a.rows();
  Completion c(m, registry);
  auto place = [&](const ForestMatrix& src, std::size_t offset) {
    const std::size_t n = src.rows();
    for (std::size_t i = 0; i < n; ++i) {
      if (!c.set_label(sigma[offset + i] - 1, src.label(i).decoration)) return false;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!c.fix(sigma[offset + i] - 1, sigma[offset + j] - 1, src.rel(i, j).kind)) return false;
    }
    return true;
  };
  if (!place(a, 0) || !place(b, k)) return {};
  return c.run();
}

}  // namespace

Shuffle::Shuffle(std::size_t k_, std::size_t l_, std::vector<std::size_t> s) : k(k_), l(l_), sigma(std::move(s)) {
  check_blocks(k, l, sigma);
  if (!is_surjective(sigma, k + l)) throw DomainError("shuffle " + one_line(sigma) + " is not a permutation");
}

std::string Shuffle::text() const { return one_line(sigma); }

QuasiShuffle::QuasiShuffle(std::size_t k_, std::size_t l_, std::vector<std::size_t> s)
    : k(k_), l(l_), sigma(std::move(s)) {
  check_blocks(k, l, sigma);
  if (!is_surjective(sigma, m())) throw DomainError("quasi-shuffle " + one_line(sigma) + " is not surjective");
}

std::size_t QuasiShuffle::m() const { return sigma.empty() ? 0 : *std::max_element(sigma.begin(), sigma.end()); }

std::string QuasiShuffle::text() const { return one_line(sigma); }

std::vector<Shuffle> shuffles(std::size_t k, std::size_t l) {
  std::vector<Shuffle> out;
  // Choose the positions of A's rows; B fills the rest in order.
  std::vector<bool> pick(k + l, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> sigma;
    for (std::size_t p = 0; p < k + l; ++p)
      if (pick[p]) sigma.push_back(p + 1);
    for (std::size_t p = 0; p < k + l; ++p)
      if (!pick[p]) sigma.push_back(p + 1);
    out.emplace_back(k, l, std::move(sigma));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<QuasiShuffle> quasi_shuffles(std::size_t k, std::size_t l) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> sigma(k + l);
  auto rec = [&](auto&& self, std::size_t a, std::size_t b, std::size_t pos) -> void {
    if (a == k && b == l) {
      all.push_back(sigma);
      return;
    }
    if (a < k) {
      sigma[a] = pos;
      self(self, a + 1, b, pos + 1);
    }
    if (b < l) {
      sigma[k + b] = pos;
      self(self, a, b + 1, pos + 1);
    }
    if (a < k && b < l) {
      sigma[a] = sigma[k + b] = pos;
      self(self, a + 1, b + 1, pos + 1);
    }
  };
  rec(rec, 0, 0, 1);
  std::vector<QuasiShuffle> out;
  for (auto& s : all) out.emplace_back(k, l, std::move(s));
  std::sort(out.begin(), out.end(), [](const QuasiShuffle& x, const QuasiShuffle& y) {
    if (x.m() != y.m()) return x.m() > y.m();
    return x.sigma < y.sigma;
  });
  return out;
}

std::vector<ForestMatrix> fm_sigma(const ForestMatrix& a, const ForestMatrix& b, const Shuffle& sigma,
                                   const DecorationRegistry& registry) {
  check_inputs(a, b, sigma.k, sigma.l, registry);
  return complete(a, b, sigma.sigma, sigma.k + sigma.l, registry);
}

std::vector<ForestMatrix> fm_sigma_quasi(const ForestMatrix& a, const ForestMatrix& b, const QuasiShuffle& sigma,
                                         const DecorationRegistry& registry) {
  check_inputs(a, b, sigma.k, sigma.l, registry);
  return complete(a, b, sigma.sigma, sigma.m(), registry);
}

}  // namespace mhopf
