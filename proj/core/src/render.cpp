#include "ctqw/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <zlib.h>

#include "ctqw/io.hpp"

namespace ctqw {

namespace {

void put_u32be(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_chunk(std::string& out, const char type[5], const std::string& data) {
  put_u32be(out, static_cast<std::uint32_t>(data.size()));
  out.append(type, 4);
  out += data;
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(type), 4);
  if (!data.empty()) {
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()),
                static_cast<uInt>(data.size()));
  }
  put_u32be(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

Rgb diverging_color(double value, double vmax) {
  if (!(vmax > 0.0) || !std::isfinite(value)) return Rgb{};
  const double t = std::clamp(value / vmax, -1.0, 1.0);
  const auto fade =
      static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - std::abs(t))));
  if (t >= 0.0) return Rgb{255, fade, fade};
  return Rgb{fade, fade, 255};
}

void write_png(const std::filesystem::path& path, int width, int height,
               const std::vector<Rgb>& pixels) {
  if (width <= 0 || height <= 0 ||
      pixels.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("write_png: pixel buffer does not match " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }

  // Scanlines, each prefixed with filter type 0.
  std::string raw;
  raw.reserve(static_cast<std::size_t>(height) * (1 + 3 * width));
  for (int y = 0; y < height; ++y) {
    raw.push_back('\0');
    for (int x = 0; x < width; ++x) {
      const Rgb& px = pixels[static_cast<std::size_t>(y) * width + x];
      raw.push_back(static_cast<char>(px.r));
      raw.push_back(static_cast<char>(px.g));
      raw.push_back(static_cast<char>(px.b));
    }
  }

  uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
  std::string compressed(compressed_size, '\0');
  const int rc = compress2(reinterpret_cast<Bytef*>(compressed.data()),
                           &compressed_size,
                           reinterpret_cast<const Bytef*>(raw.data()),
                           static_cast<uLong>(raw.size()), 6);
  if (rc != Z_OK) {
    throw std::runtime_error("write_png: deflate failed for " + path.string());
  }
  compressed.resize(compressed_size);

  std::string out("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  put_u32be(ihdr, static_cast<std::uint32_t>(width));
  put_u32be(ihdr, static_cast<std::uint32_t>(height));
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // truecolor
  ihdr.push_back(0);   // deflate
  ihdr.push_back(0);   // adaptive filtering
  ihdr.push_back(0);   // no interlace
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", compressed);
  put_chunk(out, "IEND", "");

  try {
    write_text_atomic(path, out);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("write_png: ") + e.what());
  }
}

void render_heatmap(const Eigen::MatrixXd& grid,
                    const std::filesystem::path& path, int cell_px,
                    std::optional<double> vmax) {
  if (grid.rows() == 0 || grid.cols() == 0) {
    throw std::invalid_argument("render_heatmap: empty grid");
  }
  if (cell_px < 1) {
    throw std::invalid_argument("render_heatmap: cell_px must be >= 1");
  }
  const int nx = static_cast<int>(grid.rows());
  const int nk = static_cast<int>(grid.cols());
  const double scale = vmax.value_or(grid.cwiseAbs().maxCoeff());

  const int width = nx * cell_px;
  const int height = nk * cell_px;
  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * height);
  for (int py = 0; py < height; ++py) {
    const int k = nk - 1 - py / cell_px;  // k = 0 on the bottom row
    for (int px = 0; px < width; ++px) {
      const int x = px / cell_px;
      pixels[static_cast<std::size_t>(py) * width + px] =
          diverging_color(grid(x, k), scale);
    }
  }
  write_png(path, width, height, pixels);
}

}  // namespace ctqw
