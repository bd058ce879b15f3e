#pragma once

#include <string>
#include <vector>

#include "pnc/pipeline.hpp"
#include "pnc/practical.hpp"

namespace pnc {

// Row dumps for checkpointing: raw little-endian 64-bit pairs (n, sigma) in
// binary form, or "n,sigma" lines with a header in CSV form.  Augmented
// dumps append the three snapshot intervals as lo/hi doubles.

void write_rows(const std::vector<PracticalRow>& rows, const std::string& path,
                bool binary);
std::vector<PracticalRow> read_rows(const std::string& path, bool binary);

void write_augmented_rows(const std::vector<AugmentedRow>& rows,
                          const std::string& path, bool binary);
std::vector<AugmentedRow> read_augmented_rows(const std::string& path,
                                              bool binary);

}  // namespace pnc
