#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace focal {

enum class CategoryKind { Instance, Stuff };

struct Category {
    std::string name;
    CategoryKind kind = CategoryKind::Stuff;
    int texture_id = 0;
};

// Category vocabulary. Names must be unique and at least one stuff
// category (the background) must exist.
struct CategoryTable {
    std::vector<Category> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool is_instance(int category_id) const {
        return entries[static_cast<size_t>(category_id)].kind == CategoryKind::Instance;
    }
    int find(const std::string& name) const; // -1 if absent
    void validate() const;                   // throws on duplicate names / no stuff
};

// One object of the conditioning layout: a category and a normalized
// bounding box [x1, y1, x2, y2] with x1 <= x2, y1 <= y2, all in [0, 1].
struct SceneObject {
    int category_id = 0;
    double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

    double area() const { return (x2 - x1) * (y2 - y1); }
};

struct Layout {
    std::vector<SceneObject> objects;

    int size() const { return static_cast<int>(objects.size()); }
    void validate(const CategoryTable& categories) const; // throws on invariant breach
    bool operator==(const Layout&) const = default;
};

// Patch positions indexed 0 .. rows*cols-1 in raster order.
struct PatchGrid {
    int rows = 1;
    int cols = 1;

    int count() const { return rows * cols; }
    int index(int r, int c) const { return r * cols + c; }
    int row_of(int i) const { return i / cols; }
    int col_of(int i) const { return i % cols; }
};

// Owner label for a patch that no instance covers.
inline constexpr int kStuffOwner = -1;

// Sort objects by (descending bbox area, ascending category_id,
// ascending x1, ascending y1); stable, hence idempotent.
Layout canonicalize(const Layout& layout);

bool is_canonical(const Layout& layout);

// Patches whose center ((c+0.5)/cols, (r+0.5)/rows) lies in the half-open
// box [x1,x2) x [y1,y2). Returned in ascending index order.
std::vector<int> patch_membership(const SceneObject& obj, const PatchGrid& grid);

// Per-patch owner: the covering *instance* with smallest bbox area
// (tie: latest in canonical order), or kStuffOwner when only stuff or
// nothing covers the patch. The layout must be canonical.
std::vector<int> assign_patch_owner(const Layout& layout, const PatchGrid& grid,
                                    const CategoryTable& categories);

// Per-patch owning object index over *all* objects: instances take
// precedence as in assign_patch_owner; a patch covered only by stuff is
// owned by the smallest-area covering stuff object (tie: latest).
// Patches covered by nothing get -1.
std::vector<int> assign_patch_object(const Layout& layout, const PatchGrid& grid,
                                     const CategoryTable& categories);

// Text format: one `category_name x1 y1 x2 y2` line per object,
// `#` starts a comment.
Layout parse_layout(const std::string& text, const CategoryTable& categories);
std::string format_layout(const Layout& layout, const CategoryTable& categories);
Layout load_layout(const std::string& path, const CategoryTable& categories);
void save_layout(const std::string& path, const Layout& layout,
                 const CategoryTable& categories);

// Text format: one `name kind texture_id` line per category, kind is
// `instance` or `stuff`, `#` starts a comment.
CategoryTable parse_categories(const std::string& text);
std::string format_categories(const CategoryTable& categories);
CategoryTable load_categories(const std::string& path);
void save_categories(const std::string& path, const CategoryTable& categories);

} // namespace focal
