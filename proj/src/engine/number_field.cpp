#include "slicess/number_field.hpp"

#include <algorithm>
#include <bit>

#include "slicess/error.hpp"

namespace slicess {

namespace {

constexpr int kRealModulusExponent = 3;

MultiIndex times_generator(const MultiIndex& m, int index, int exponent) {
  MultiIndex out = m;
  out.set(index, m.exponent(index) + exponent);
  return out;
}

}  // namespace

NumberFieldEngine::NumberFieldEngine(std::shared_ptr<const CohomologyTable> table)
    : table_(std::move(table)),
      real_(EngineModel{RingSpec::lazard(), Coefficient::mod2n(kRealModulusExponent), false}) {
  if (table_->coeff.kind != CoefficientKind::INTEGER && table_->coeff.kind != CoefficientKind::TWO_ADIC)
    throw Error(ErrorKind::UNSUPPORTED_PAIRING, "number-field mode needs a Z or Z_2 table");
}

std::int64_t NumberFieldEngine::infinity_page(const FieldTerm& term) {
  const int reach = std::max({term.p, term.q, 1});
  return std::int64_t{1} << (std::bit_width(static_cast<unsigned>(reach)) + 1);
}

F2Subspace NumberFieldEngine::image(const FieldTerm& term) const { return table_->image(term.p, term.q); }

bool NumberFieldEngine::real_differential(const FieldTerm& term, std::int64_t page) {
  if (table_->r1 == 0 || !real_two_adic_nonzero(term.p, term.q)) return false;
  const RealMonomial mono{term.p, 0, (term.q - term.p) / 2};
  return real_.differential_nonzero(mono, term.ring, page);
}

NumberFieldEngine::State NumberFieldEngine::state(const FieldTerm& term, std::int64_t page) {
  std::int64_t r = page - 1;
  while (r >= 1 && !page_can_be_nonzero(real_.model(), r)) --r;
  if (r < 1) return {F2Subspace::full(table_->r1), F2Subspace(table_->r1)};
  const auto key = std::make_pair(term, r);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const State before = state(term, r);
  State after = before;
  const int k = std::countr_zero(static_cast<std::uint64_t>(r + 1));
  const int generator = (1 << k) - 1;
  if (real_differential(term, r)) {
    const FieldTerm target{term.p + (2 << k) - 1, term.q + generator, times_generator(term.ring, generator, 1)};
    after.cycles = before.cycles.intersect(state(target, r).boundaries);
  }
  if (term.ring.divisible_by(generator) && term.p >= (2 << k) - 1) {
    const FieldTerm source{term.p - (2 << k) + 1, term.q - generator, times_generator(term.ring, generator, -1)};
    if (real_differential(source, r)) {
      const State s = state(source, r);
      const F2Subspace hit = term.p >= 3 && source.p >= 3 ? s.cycles : image(source).intersect(s.cycles);
      after.boundaries = before.boundaries.sum(hit);
    }
  }
  memo_.emplace(key, after);
  return after;
}

GroupDescriptor NumberFieldEngine::er(const FieldTerm& term, std::int64_t page) {
  if (term.p < 0 || term.q < 0) return {};
  const State s = state(term, page);
  if (term.p <= 2) {
    if (s.boundaries.dim() != 0) throw Error(ErrorKind::SHAPE_MISMATCH, "boundaries in a low-degree term");
    return table_->preimage(term.p, term.q, s.cycles);
  }
  if (!real_two_adic_nonzero(term.p, term.q)) return {};
  if (!s.boundaries.is_subspace_of(s.cycles)) throw Error(ErrorKind::SHAPE_MISMATCH, "boundaries outside cycles");
  return GroupDescriptor::from_orders(0, std::vector<int>(s.cycles.dim() - s.boundaries.dim(), 1));
}

GroupDescriptor NumberFieldEngine::einfty(const FieldTerm& term) { return er(term, infinity_page(term)); }

std::map<FieldTerm, GroupDescriptor> number_field_einfty(std::shared_ptr<const CohomologyTable> table, int qmax,
                                                         int max_ring_degree) {
  NumberFieldEngine engine(std::move(table));
  std::map<FieldTerm, GroupDescriptor> out;
  for (int degree = 0; degree <= max_ring_degree; ++degree) {
    for (const MultiIndex& m : graded_basis(RingSpec::lazard(), degree)) {
      for (int q = 0; q <= qmax; ++q)
        for (int p = 0; p <= q; ++p) out[{p, q, m}] = engine.einfty({p, q, m});
      out[{2, 1, m}] = engine.einfty({2, 1, m});
    }
  }
  return out;
}

}  // namespace slicess
