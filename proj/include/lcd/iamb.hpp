#pragma once

#include "lcd/ci.hpp"

namespace lcd {

// IAMB Markov blanket discovery. Forward pass sweeps candidates in canonical
// order, adding every currently dependent node against the growing blanket,
// and repeats until stable; the backward pass removes nodes independent of x
// given the rest.
NodeSet findMarkovBlanket(CiSource& src, NodeId x);

}  // namespace lcd
