#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qcrit {

/// Symmetry-restricted basis of the many-body Hilbert space.
///
/// Encoding: bit b of a basis integer is 1 when site (or JW mode) b is
/// spin-down / occupied. The Full kind keeps the basis implicit; restricted
/// kinds store the sorted list of admitted encodings.
class BasisSector {
 public:
  enum class Kind {
    Full,             // all 2^n states
    TotalSz,          // fixed number of down spins
    ParticleNumbers,  // fixed (n_up, n_down) fermion numbers, JW mode layout
    CollectiveBlock,  // maximal collective-spin block, dimension n+1
  };

  static BasisSector full(int n_sites);
  static BasisSector total_sz(int n_sites, int n_down);
  /// JW layout: mode 2*site + spin, spin up = 0. n_sites counts modes (2L).
  static BasisSector particle_numbers(int n_modes, int n_up, int n_down);
  static BasisSector collective_block(int n_particles);

  Kind kind() const { return kind_; }
  int n_sites() const { return n_sites_; }
  std::size_t size() const { return size_; }

  /// Basis encoding at position i (Full: identity; CollectiveBlock: i).
  std::uint64_t state_at(std::size_t i) const;
  /// Index of an encoding, or -1 when it lies outside the sector.
  std::ptrdiff_t index_of(std::uint64_t bits) const;

 private:
  Kind kind_ = Kind::Full;
  int n_sites_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> basis_;  // empty for Full / CollectiveBlock
};

using SectorPtr = std::shared_ptr<const BasisSector>;

}  // namespace qcrit
