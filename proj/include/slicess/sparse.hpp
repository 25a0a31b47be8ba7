#pragma once

#include <cstdint>
#include <map>
#include <tuple>

#include "slicess/spectrum.hpp"

namespace slicess {

// Real spectral sequence evaluated one class at a time: the E^r state of
// mono * ring is derived from the E^{r'} states of itself, its differential
// target and its unique possible source on the previous nonzero page r'.
// No window is needed, so it also serves the number-field engine.
class SparseRealEngine {
 public:
  struct State {
    int cycle = 0;
    int boundary = 0;
    bool alive() const { return cycle < boundary; }
    friend bool operator==(const State&, const State&) = default;
  };

  explicit SparseRealEngine(EngineModel model) : model_(std::move(model)) {}
  const EngineModel& model() const { return model_; }

  State state(const RealMonomial& mono, const MultiIndex& ring, std::int64_t page);
  // d^page applied to the generator 2^cycle * mono * ring is nonzero on E^page.
  bool differential_nonzero(const RealMonomial& mono, const MultiIndex& ring, std::int64_t page);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::int64_t previous_page(std::int64_t page) const;
  MultiIndex times_generator(const MultiIndex& ring, int k, int exponent) const;

  EngineModel model_;
  std::map<std::tuple<int, int, int, MultiIndex, std::int64_t>, State> memo_;
};

}  // namespace slicess
