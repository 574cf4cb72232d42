#include "conftc/errors.hpp"

namespace conftc {

ResourceLimit::ResourceLimit(std::size_t dimension, std::size_t cell_count,
                             std::size_t estimated_bytes, std::size_t budget_bytes)
    : Error("resource limit: dimension " + std::to_string(dimension) + " has " +
            std::to_string(cell_count) + " cells; estimated footprint " +
            std::to_string(estimated_bytes) + " bytes exceeds budget " +
            std::to_string(budget_bytes) + " bytes"),
      dimension_(dimension),
      cell_count_(cell_count),
      estimated_bytes_(estimated_bytes) {}

NotACycle::NotACycle(std::size_t vector_index, std::size_t dimension)
    : Error("not a cycle: vector " + std::to_string(vector_index) + " of dimension " +
            std::to_string(dimension) + " has nonzero boundary"),
      vector_index_(vector_index) {}

}  // namespace conftc
