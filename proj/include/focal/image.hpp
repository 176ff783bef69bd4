#pragma once

#include <string>
#include <vector>

namespace focal {

// Small RGB raster with values in [0, 1], row-major, interleaved channels.
struct SceneImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels; // height * width * 3

    SceneImage() = default;
    SceneImage(int w, int h) : width(w), height(h),
        pixels(static_cast<size_t>(w) * static_cast<size_t>(h) * 3, 0.0) {}

    double& at(int y, int x, int ch) {
        return pixels[(static_cast<size_t>(y) * width + x) * 3 + static_cast<size_t>(ch)];
    }
    double at(int y, int x, int ch) const {
        return pixels[(static_cast<size_t>(y) * width + x) * 3 + static_cast<size_t>(ch)];
    }

    bool operator==(const SceneImage&) const = default;
};

// Flattened pixels of the p x p patch at grid cell (patch_row, patch_col),
// in (row, col, channel) order; dimension p*p*3.
std::vector<double> extract_patch(const SceneImage& image, int patch_row, int patch_col,
                                  int patch_px);
void paste_patch(SceneImage& image, int patch_row, int patch_col, int patch_px,
                 const std::vector<double>& patch);

// Binary PPM (P6), maxval 255. Writing rounds each channel to 8 bits.
std::string image_to_ppm(const SceneImage& image);
SceneImage image_from_ppm(const std::string& bytes);
void save_ppm(const std::string& path, const SceneImage& image);
SceneImage load_ppm(const std::string& path);

} // namespace focal
