#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acttend/matrix.hpp"

namespace acttend {

struct IdxData {
    Matrix images;  // n x 784, pixel bytes scaled to [0,1]
    std::vector<int> labels;
};

// Big-endian IDX pair: images magic 0x00000803 with 28x28 payload, labels
// magic 0x00000801. Counts must agree. Format errors name the byte offset.
IdxData load_idx(const std::string& images_path, const std::string& labels_path);

// Writers for fixtures and round-trip checks; bytes are raw pixels (row-major
// 28x28 per image).
void write_idx_images(const std::string& path, const std::vector<std::uint8_t>& pixels, int count);
void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

}  // namespace acttend
