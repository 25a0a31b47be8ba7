#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slicess/band.hpp"
#include "slicess/base_data.hpp"

namespace slicess {

// Each check returns human-readable failures (empty when the property holds)
// and adds the number of individual assertions made to `checked`.

// d^r(ab) = d^r(a) b + a d^r(b) on random products of E^r classes
// rho^i tau^j u^{m 2^{k-1}} x_K of the MGL/BP family (mod 2^n).
std::vector<std::string> leibniz_failures(const EngineModel& model, int k, std::uint64_t seed, int samples,
                                          std::uint64_t& checked);

// Every nonzero differential leaving an entry of the band lands in the term
// at (p-1, q+r, w), for all pages up to the band's infinity page.
std::vector<std::string> tridegree_failures(const RealBand& band, std::uint64_t& checked);

// d^r vanishes on the diagonal classes rho^a x_K and commutes with
// multiplication by them.
std::vector<std::string> diagonal_failures(const RealBand& band, std::uint64_t& checked);

// After the band reached E^infinity: every window entry stabilized by page
// 1 + (p - w) - ceil(p/2), with ceil(p/2) clipped at 0 unless slices may be
// negative (Morava K-theory).
std::vector<std::string> stabilization_failures(const RealBand& band, std::uint64_t& checked);

// For collapse-shaped tables every page equals E^1 on the given range.
std::vector<std::string> collapse_failures(std::shared_ptr<const CohomologyTable> table, int qmax, int max_ring_degree,
                                           std::uint64_t& checked);

}  // namespace slicess
