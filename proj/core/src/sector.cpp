#include "qcrit/sector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qcrit {

BasisSector BasisSector::full(int n_sites) {
  if (n_sites < 1 || n_sites > 26)
    throw std::invalid_argument("full sector supports 1..26 sites");
  BasisSector s;
  s.kind_ = Kind::Full;
  s.n_sites_ = n_sites;
  s.size_ = std::size_t{1} << n_sites;
  return s;
}

BasisSector BasisSector::total_sz(int n_sites, int n_down) {
  if (n_sites < 1 || n_sites > 26)
    throw std::invalid_argument("sector supports 1..26 sites");
  if (n_down < 0 || n_down > n_sites)
    throw std::invalid_argument("invalid down-spin count");
  BasisSector s;
  s.kind_ = Kind::TotalSz;
  s.n_sites_ = n_sites;
  const std::uint64_t dim = std::uint64_t{1} << n_sites;
  for (std::uint64_t b = 0; b < dim; ++b)
    if (std::popcount(b) == n_down) s.basis_.push_back(b);
  s.size_ = s.basis_.size();
  return s;
}

BasisSector BasisSector::particle_numbers(int n_modes, int n_up, int n_down) {
  if (n_modes < 2 || n_modes % 2 != 0 || n_modes > 26)
    throw std::invalid_argument("mode count must be even and <= 26");
  if (n_up < 0 || n_down < 0 || n_up > n_modes / 2 || n_down > n_modes / 2)
    throw std::invalid_argument("invalid particle numbers");
  std::uint64_t even_mask = 0;
  for (int m = 0; m < n_modes; m += 2) even_mask |= std::uint64_t{1} << m;
  BasisSector s;
  s.kind_ = Kind::ParticleNumbers;
  s.n_sites_ = n_modes;
  const std::uint64_t dim = std::uint64_t{1} << n_modes;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::popcount(b & even_mask) == n_up &&
        std::popcount(b & ~even_mask) == n_down)
      s.basis_.push_back(b);
  }
  s.size_ = s.basis_.size();
  return s;
}

BasisSector BasisSector::collective_block(int n_particles) {
  if (n_particles < 2)
    throw std::invalid_argument("collective block needs >= 2 particles");
  BasisSector s;
  s.kind_ = Kind::CollectiveBlock;
  s.n_sites_ = n_particles;
  s.size_ = static_cast<std::size_t>(n_particles) + 1;
  return s;
}

std::uint64_t BasisSector::state_at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("basis index out of range");
  if (basis_.empty()) return i;
  return basis_[i];
}

std::ptrdiff_t BasisSector::index_of(std::uint64_t bits) const {
  if (basis_.empty()) {
    return bits < size_ ? static_cast<std::ptrdiff_t>(bits) : -1;
  }
  auto it = std::lower_bound(basis_.begin(), basis_.end(), bits);
  if (it == basis_.end() || *it != bits) return -1;
  return it - basis_.begin();
}

}  // namespace qcrit
