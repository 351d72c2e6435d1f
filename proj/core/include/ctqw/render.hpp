#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace ctqw {

struct Rgb {
  std::uint8_t r = 255, g = 255, b = 255;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Diverging map: white at 0, saturating to red at +vmax and blue at -vmax.
/// color(-v) is color(v) with the red and blue channels swapped; inputs
/// beyond +-vmax clamp. vmax <= 0 renders everything white.
Rgb diverging_color(double value, double vmax);

/// 8-bit RGB PNG, no interlacing, filter 0 scanlines, single IDAT chunk.
/// pixels is row-major, top row first, size width*height. I/O failures
/// throw std::runtime_error carrying the path.
void write_png(const std::filesystem::path& path, int width, int height,
               const std::vector<Rgb>& pixels);

/// Heatmap of grid(x, k): x runs horizontally (left to right), k vertically
/// with k = 0 on the bottom row, cell_px pixels per cell. The colour scale
/// is symmetric about zero at max |grid| unless vmax overrides it.
void render_heatmap(const Eigen::MatrixXd& grid,
                    const std::filesystem::path& path, int cell_px = 8,
                    std::optional<double> vmax = {});

}  // namespace ctqw
