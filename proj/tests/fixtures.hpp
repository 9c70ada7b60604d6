#pragma once

// Hand-transcribed colorings of small signed books, edge by edge in book
// order (spine, then each page from v1), first endpoint nearest v1.

#include <vector>

#include "sgc/book.hpp"
#include "sgc/coloring.hpp"

namespace fixture {

// (B(4,2,3), sigma_0) with M_3.
inline sgc::IncidenceColoring b423_sigma0() {
  return sgc::IncidenceColoring(sgc::ColorSet(3), {
                                                      {-1, 1}, {-1, 1},  // spine
                                                      {1, -1}, {0, 0},   // page 1
                                                      {0, 0},  {1, -1},  // page 2
                                                  });
}

// (B(5,5,3), sigma_3) with M_6.
inline sgc::IncidenceColoring b553_sigma3() {
  return sgc::IncidenceColoring(sgc::ColorSet(6), {
                                                      {-3, 3}, {-3, 3},                    // spine
                                                      {1, 1},  {2, -2},  {2, -2},          // page 1
                                                      {-1, -1}, {1, -1}, {1, -1},          // page 2
                                                      {2, 2},  {-1, 1},  {-1, 1},          // page 3
                                                      {-2, 2}, {-2, 2},  {-2, 2},          // page 4
                                                      {3, -3}, {3, -3},  {3, -3},          // page 5
                                                  });
}

}  // namespace fixture
