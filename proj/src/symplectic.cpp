#include "torelli/symplectic.hpp"

namespace torelli {

SymplecticMatrix symplectic_form() {
  return SymplecticMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
}

long intersection(const HomologyClass& x, const HomologyClass& y) {
  return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
}

HomologyClass chain_class(int i) {
  switch (i) {
    case 1: return {1, 0, 0, 0};
    case 2: return {0, 1, 0, 0};
    case 3: return {1, 0, 1, 0};
    case 4: return {0, 0, 0, 1};
    case 5: return {0, 0, 1, 0};
    default: throw Error(ErrorCode::IndexRange, "chain curve index " + std::to_string(i));
  }
}

SymplecticMatrix symplectic_generator(int i) {
  const HomologyClass v = chain_class(i);
  // Column j is the image of basis vector e_j: e_j + <e_j, v> v.
  SymplecticMatrix t = SymplecticMatrix::identity(4);
  for (int j = 0; j < 4; ++j) {
    HomologyClass e{};
    e[static_cast<std::size_t>(j)] = 1;
    const long pairing = intersection(e, v);
    for (int r = 0; r < 4; ++r) t(r, j) += pairing * v[static_cast<std::size_t>(r)];
  }
  return t;
}

bool is_symplectic(const SymplecticMatrix& m) {
  const auto j = symplectic_form();
  return m.transpose() * j * m == j && determinant(m) == 1;
}

const GeneratorImages<Integer>& symplectic_images() {
  static const GeneratorImages<Integer> images = [] {
    std::vector<SymplecticMatrix> gens;
    for (int i = 1; i <= kNumGenerators; ++i) gens.push_back(symplectic_generator(i));
    return GeneratorImages<Integer>::from_generators(std::move(gens));
  }();
  return images;
}

SymplecticMatrix symplectic_image(const MCGWord& w) { return evaluate_word(w, symplectic_images()); }

bool is_torelli(const MCGWord& w) { return symplectic_image(w).is_identity(); }

MCGWord hyperelliptic_word() { return parse_word("c1 c2 c3 c4 c5 c5 c4 c3 c2 c1"); }

}  // namespace torelli
