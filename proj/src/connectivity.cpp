#include "focal/connectivity.hpp"

#include "focal/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace focal {

std::vector<int> ConnectivityMask::row_allowed(int row) const {
    std::vector<int> cols;
    for (int j = 0; j < size(); j++) {
        if (allowed(row, j)) cols.push_back(j);
    }
    return cols;
}

ConnectivityMask causal_mask(int n_objects, int n_patches) {
    if (n_objects < 0 || n_patches < 1) {
        throw std::invalid_argument("causal_mask: need n_objects >= 0 and n_patches >= 1");
    }
    ConnectivityMask mask(n_objects, n_patches);
    for (int i = 0; i < mask.size(); i++) {
        for (int j = 0; j <= i; j++) mask.set(i, j, true);
    }
    return mask;
}

ConnectivityMask grid_mask(int n_objects, const PatchGrid& grid, int k) {
    if (k < 1 || k > std::max(grid.rows, grid.cols)) {
        throw std::invalid_argument("grid_mask: window size out of range");
    }
    int n = n_objects;
    ConnectivityMask mask(n, grid.count());
    // object rows: causal over objects
    for (int i = 0; i < n; i++) {
        for (int j = 0; j <= i; j++) mask.set(i, j, true);
    }
    for (int p = 0; p < grid.count(); p++) {
        int row = n + p;
        // patch rows attend every object
        for (int j = 0; j < n; j++) mask.set(row, j, true);
        int pr = grid.row_of(p), pc = grid.col_of(p);
        for (int q = 0; q <= p; q++) {
            int qr = grid.row_of(q), qc = grid.col_of(q);
            if (std::max(std::abs(pr - qr), std::abs(pc - qc)) <= k - 1) {
                mask.set(row, n + q, true);
            }
        }
    }
    return mask;
}

bool patches_neighbors(const std::vector<int>& owner, int patch_a, int patch_b) {
    int oa = owner[static_cast<size_t>(patch_a)];
    int ob = owner[static_cast<size_t>(patch_b)];
    if (oa == kStuffOwner && ob == kStuffOwner) return true;
    return oa >= 0 && oa == ob;
}

ConnectivityMask focal_mask(const Layout& layout, const PatchGrid& grid,
                            const CategoryTable& categories,
                            const FocalOptions& options) {
    if (!is_canonical(layout)) {
        throw std::invalid_argument("focal_mask requires a canonicalized layout");
    }
    std::vector<int> owner = assign_patch_owner(layout, grid, categories);
    int n = layout.size();
    ConnectivityMask mask(n, grid.count());

    // object-object block; object rows never attend patch columns
    for (int i = 0; i < n; i++) {
        if (options.object_object) {
            for (int j = 0; j < n; j++) mask.set(i, j, true);
        } else {
            for (int j = 0; j <= i; j++) mask.set(i, j, true);
        }
    }

    for (int p = 0; p < grid.count(); p++) {
        int row = n + p;
        // object-patch block
        if (options.object_patch && owner[static_cast<size_t>(p)] != kStuffOwner) {
            mask.set(row, owner[static_cast<size_t>(p)], true);
        } else {
            for (int j = 0; j < n; j++) mask.set(row, j, true);
        }
        // patch-patch block
        for (int q = 0; q <= p; q++) {
            bool ok = options.patch_patch ? patches_neighbors(owner, p, q) : true;
            if (ok) mask.set(row, n + q, true);
        }
    }
    return mask;
}

std::vector<int> reachable_set(const ConnectivityMask& mask, int depth, int position) {
    if (depth < 1) throw std::invalid_argument("reachable_set: depth >= 1 required");
    std::vector<char> reached(static_cast<size_t>(mask.size()), 0);
    std::vector<int> frontier{position};
    reached[static_cast<size_t>(position)] = 1;
    for (int step = 0; step < depth && !frontier.empty(); step++) {
        std::vector<int> next;
        for (int q : frontier) {
            for (int j = 0; j < mask.size(); j++) {
                if (mask.allowed(q, j) && !reached[static_cast<size_t>(j)]) {
                    reached[static_cast<size_t>(j)] = 1;
                    next.push_back(j);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<int> out;
    for (int j = 0; j < mask.size(); j++) {
        if (reached[static_cast<size_t>(j)]) out.push_back(j);
    }
    return out;
}

std::string mask_to_pgm(const ConnectivityMask& mask) {
    std::string out = "P5\n" + std::to_string(mask.size()) + " " +
                      std::to_string(mask.size()) + "\n255\n";
    for (int i = 0; i < mask.size(); i++) {
        for (int j = 0; j < mask.size(); j++) {
            out.push_back(mask.allowed(i, j) ? static_cast<char>(255) : static_cast<char>(0));
        }
    }
    return out;
}

void save_mask_pgm(const std::string& path, const ConnectivityMask& mask) {
    std::string pgm = mask_to_pgm(mask);
    write_file_bytes(path, pgm.data(), pgm.size());
}

std::string mask_to_pairs(const ConnectivityMask& mask) {
    std::string out;
    for (int i = 0; i < mask.size(); i++) {
        for (int j = 0; j < mask.size(); j++) {
            if (mask.allowed(i, j)) {
                out += std::to_string(i);
                out += ' ';
                out += std::to_string(j);
                out += '\n';
            }
        }
    }
    return out;
}

} // namespace focal
