#pragma once

#include "torelli/word.hpp"

#include <array>

namespace torelli {

using SymplecticMatrix = SquareMatrix<Integer>;
using HomologyClass = std::array<long, 4>;  // coordinates in (A1, B1, A2, B2)

/// Gram matrix J of the intersection form, <A_i, B_j> = delta_ij.
SymplecticMatrix symplectic_form();

long intersection(const HomologyClass& x, const HomologyClass& y);

/// Homology class of the i-th chain curve: A1, B1, A1+A2, B2, A2.
HomologyClass chain_class(int i);

/// Transvection x -> x + <x, v_i> v_i.
SymplecticMatrix symplectic_generator(int i);

bool is_symplectic(const SymplecticMatrix& m);

const GeneratorImages<Integer>& symplectic_images();

SymplecticMatrix symplectic_image(const MCGWord& w);

/// Torelli membership: the homology action is trivial.
bool is_torelli(const MCGWord& w);

/// c1 c2 c3 c4 c5 c5 c4 c3 c2 c1
MCGWord hyperelliptic_word();

}  // namespace torelli
