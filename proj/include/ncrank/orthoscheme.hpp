#pragma once

#include "ncrank/frames.hpp"

namespace ncrank {

/// Cube coordinates of a point of K(𝓕) under the [0,1]^n isometry, tied to the
/// frame that produced them.
struct FCoordinates {
  std::vector<Rat> v;
  const Frame* frame;
};

/// x = Σ λ_i X_i ↦ Σ λ_i 1_{S_i}; every support element must be expressible
/// in the frame.
FCoordinates f_coordinates(const ChainPoint& z, const Frame& frame);

/// Sorts coordinates decreasingly (stable, ties by atom index), forms the
/// prefix-join chain, and drops zero-coefficient terms.
ChainPoint recover(const FCoordinates& c);

/// Exact squared distance Σ (a_i − b_i)²; both points must carry the same frame.
Rat distance_in_frame_sq(const FCoordinates& a, const FCoordinates& b);

}  // namespace ncrank
