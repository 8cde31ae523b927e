#include "acttend/idx.hpp"

#include <cstdio>
#include <fstream>

#include "acttend/errors.hpp"

namespace acttend {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803u;
constexpr std::uint32_t kLabelsMagic = 0x00000801u;

std::uint32_t read_u32_be(std::istream& f, const std::string& path, std::size_t offset) {
    unsigned char b[4];
    f.read(reinterpret_cast<char*>(b), 4);
    if (!f)
        throw FormatError(path + ": truncated at offset " + std::to_string(offset) +
                          " (expected 4 more bytes)");
    return (static_cast<std::uint32_t>(b[0]) << 24) | (static_cast<std::uint32_t>(b[1]) << 16) |
           (static_cast<std::uint32_t>(b[2]) << 8) | static_cast<std::uint32_t>(b[3]);
}

void write_u32_be(std::ostream& f, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
    f.write(reinterpret_cast<char*>(b), 4);
}

}  // namespace

IdxData load_idx(const std::string& images_path, const std::string& labels_path) {
    std::ifstream fi(images_path, std::ios::binary);
    if (!fi) throw IoError("cannot open: " + images_path);
    const std::uint32_t magic_i = read_u32_be(fi, images_path, 0);
    if (magic_i != kImagesMagic)
        throw FormatError(images_path + ": wrong magic 0x" + [&] {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%08x", magic_i);
            return std::string(buf);
        }() + " at offset 0 (images expect 0x00000803)");
    const std::uint32_t n_images = read_u32_be(fi, images_path, 4);
    const std::uint32_t rows = read_u32_be(fi, images_path, 8);
    const std::uint32_t cols = read_u32_be(fi, images_path, 12);
    if (rows != 28 || cols != 28)
        throw FormatError(images_path + ": expected 28x28 images at offset 8, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));

    const std::size_t n_pixels = static_cast<std::size_t>(n_images) * 784;
    std::vector<unsigned char> pixels(n_pixels);
    fi.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(n_pixels));
    if (static_cast<std::size_t>(fi.gcount()) != n_pixels)
        throw FormatError(images_path + ": truncated payload at offset " +
                          std::to_string(16 + fi.gcount()) + " (need " + std::to_string(n_pixels) +
                          " pixel bytes)");

    std::ifstream fl(labels_path, std::ios::binary);
    if (!fl) throw IoError("cannot open: " + labels_path);
    const std::uint32_t magic_l = read_u32_be(fl, labels_path, 0);
    if (magic_l != kLabelsMagic)
        throw FormatError(labels_path + ": wrong magic 0x" + [&] {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%08x", magic_l);
            return std::string(buf);
        }() + " at offset 0 (labels expect 0x00000801)");
    const std::uint32_t n_labels = read_u32_be(fl, labels_path, 4);
    if (n_labels != n_images)
        throw FormatError(labels_path + ": label count " + std::to_string(n_labels) +
                          " does not match image count " + std::to_string(n_images));
    std::vector<unsigned char> labels(n_labels);
    fl.read(reinterpret_cast<char*>(labels.data()), static_cast<std::streamsize>(n_labels));
    if (static_cast<std::size_t>(fl.gcount()) != n_labels)
        throw FormatError(labels_path + ": truncated payload at offset " +
                          std::to_string(8 + fl.gcount()));

    IdxData out;
    out.images = Matrix(static_cast<int>(n_images), 784);
    for (std::size_t i = 0; i < n_pixels; ++i)
        out.images.values()[i] = static_cast<double>(pixels[i]) / 255.0;
    out.labels.assign(labels.begin(), labels.end());
    return out;
}

void write_idx_images(const std::string& path, const std::vector<std::uint8_t>& pixels, int count) {
    if (pixels.size() != static_cast<std::size_t>(count) * 784)
        throw InputError("write_idx_images: pixel buffer size does not match count*784");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    write_u32_be(f, kImagesMagic);
    write_u32_be(f, static_cast<std::uint32_t>(count));
    write_u32_be(f, 28);
    write_u32_be(f, 28);
    f.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (!f) throw IoError("write failed: " + path);
}

void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    write_u32_be(f, kLabelsMagic);
    write_u32_be(f, static_cast<std::uint32_t>(labels.size()));
    f.write(reinterpret_cast<const char*>(labels.data()), static_cast<std::streamsize>(labels.size()));
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace acttend
