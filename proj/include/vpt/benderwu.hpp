#pragma once

// Exact Rayleigh-Schroedinger coefficients of the quartic oscillator ground
// state, E(g) = omega * sum_l e_l ((g/4)/omega^3)^l, via the Bender-Wu
// recursion on the polynomial part of the wavefunction.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vpt/numerics.hpp"

namespace vpt {

class BWSeries {
 public:
  BWSeries() = default;
  /// Stores the coefficients as given; call validate() to enforce invariants.
  explicit BWSeries(std::vector<ExactRational> coefficients);

  int max_order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const ExactRational& operator[](int l) const { return coefficients_.at(static_cast<std::size_t>(l)); }
  std::span<const ExactRational> coefficients() const { return coefficients_; }

  /// First L+1 coefficients; throws DomainError if L exceeds max_order().
  BWSeries truncated(int order) const;

  /// Throws DomainError("invariant violation: ...") if e_0 != 1/2 or the
  /// sign of e_l is not (-1)^(l+1) for some l >= 1.
  void validate() const;

  friend bool operator==(const BWSeries&, const BWSeries&) = default;

 private:
  std::vector<ExactRational> coefficients_;
};

/// Triangular wavefunction table of the recursion, kept for inspection.
struct BWWorkspace {
  std::vector<std::vector<ExactRational>> wave;  // wave[n][k], 0 <= k <= 2n
  std::vector<ExactRational> energy;             // energy[n] = e_n

  const ExactRational& at(int n, int k) const;
};

/// Runs the recursion through order n = 1..max_order in exact arithmetic.
BWWorkspace run_recursion(int max_order);

BWSeries generate(int max_order);

/// True iff the first five coefficients are 1/2, 3/4, -21/8, 333/16, -30885/128.
bool verify_head(const BWSeries& series);

/// 64-bit FNV-1a over the raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

/// Cache text: "bw-series v1 order=L", L+1 lines "l num/den", "checksum=<hex>".
std::string render_cache(const BWSeries& series);
BWSeries parse_cache(std::string_view text);

void save_cache(const BWSeries& series, const std::filesystem::path& path);
BWSeries load_cache(const std::filesystem::path& path);

}  // namespace vpt
