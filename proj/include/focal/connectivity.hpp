#pragma once

#include "focal/layout.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace focal {

// Boolean attention-connectivity matrix over the concatenated sequence of
// n_objects object positions followed by n_patches patch positions in
// raster order. Row = query position, column = key position. A blocked
// entry is excluded from the attention softmax entirely.
class ConnectivityMask {
public:
    ConnectivityMask(int n_objects, int n_patches)
        : n_objects_(n_objects), n_patches_(n_patches),
          bits_(static_cast<size_t>(n_objects + n_patches) *
                    static_cast<size_t>(n_objects + n_patches),
                0) {}

    int n_objects() const { return n_objects_; }
    int n_patches() const { return n_patches_; }
    int size() const { return n_objects_ + n_patches_; }

    bool allowed(int row, int col) const {
        return bits_[static_cast<size_t>(row) * static_cast<size_t>(size()) +
                     static_cast<size_t>(col)] != 0;
    }
    void set(int row, int col, bool v) {
        bits_[static_cast<size_t>(row) * static_cast<size_t>(size()) +
              static_cast<size_t>(col)] = v ? 1 : 0;
    }

    // column indices allowed in a row, ascending
    std::vector<int> row_allowed(int row) const;

    bool operator==(const ConnectivityMask&) const = default;

private:
    int n_objects_;
    int n_patches_;
    std::vector<uint8_t> bits_;
};

// Full causal mask: allowed[i][j] iff j <= i over the whole sequence.
ConnectivityMask causal_mask(int n_objects, int n_patches);

// Sliding-window variant: object rows as in the causal mask, patch rows
// allow all object columns, and patch (r,c) may attend patch (r',c') iff
// the Chebyshev distance max(|r-r'|,|c-c'|) <= k-1 and (r',c') does not
// come after (r,c) in raster order. k = max(rows, cols) reproduces the
// causal patch-patch block exactly.
ConnectivityMask grid_mask(int n_objects, const PatchGrid& grid, int k);

// Per-block switches for the ablation variants: a disabled block falls
// back to the corresponding block of the causal mask.
struct FocalOptions {
    bool object_object = true; // dense object rows over object columns
    bool object_patch = true;  // ownership-restricted patch rows over object columns
    bool patch_patch = true;   // same-owner neighborhood among patches
};

// Layout-focused mask assembled from three blocks:
//   object-object: every object attends every object;
//   object-patch:  a patch owned by an instance attends only that
//                  instance's object token, a stuff patch attends all
//                  object tokens;
//   patch-patch:   patch i attends patch j <= i iff both share the same
//                  instance owner or both are stuff;
// object rows never attend patch columns. The layout must be canonical.
ConnectivityMask focal_mask(const Layout& layout, const PatchGrid& grid,
                            const CategoryTable& categories,
                            const FocalOptions& options = {});

// Symmetric patch-neighbor relation used by the patch-patch block,
// before the raster-order restriction: same instance owner, or both stuff.
bool patches_neighbors(const std::vector<int>& owner, int patch_a, int patch_b);

// Positions j with a directed path of length <= depth from j to position i
// in the graph with an edge j -> i iff allowed[i][j]. Ascending order.
std::vector<int> reachable_set(const ConnectivityMask& mask, int depth, int position);

// Binary PGM (P5) image of the mask, one byte per cell: 255 allowed, 0 blocked.
std::string mask_to_pgm(const ConnectivityMask& mask);
void save_mask_pgm(const std::string& path, const ConnectivityMask& mask);

// One `i j` line per allowed pair, row-major ascending.
std::string mask_to_pairs(const ConnectivityMask& mask);

} // namespace focal
