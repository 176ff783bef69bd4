#include "focal/layout.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace focal {

int CategoryTable::find(const std::string& name) const {
    for (size_t i = 0; i < entries.size(); i++) {
        if (entries[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

void CategoryTable::validate() const {
    bool has_stuff = false;
    for (size_t i = 0; i < entries.size(); i++) {
        if (entries[i].kind == CategoryKind::Stuff) has_stuff = true;
        for (size_t j = i + 1; j < entries.size(); j++) {
            if (entries[i].name == entries[j].name) {
                throw std::invalid_argument("duplicate category name: " + entries[i].name);
            }
        }
    }
    if (!has_stuff) throw std::invalid_argument("category table needs at least one stuff category");
}

void Layout::validate(const CategoryTable& categories) const {
    for (const SceneObject& o : objects) {
        if (o.category_id < 0 || o.category_id >= categories.size()) {
            throw std::invalid_argument("object category_id out of range");
        }
        if (!(o.x1 <= o.x2 && o.y1 <= o.y2)) {
            throw std::invalid_argument("object bbox corners out of order");
        }
        if (o.x1 < 0 || o.y1 < 0 || o.x2 > 1 || o.y2 > 1) {
            throw std::invalid_argument("object bbox outside [0,1]");
        }
    }
}

static bool canonical_less(const SceneObject& a, const SceneObject& b) {
    double aa = a.area(), ab = b.area();
    if (aa != ab) return aa > ab;
    if (a.category_id != b.category_id) return a.category_id < b.category_id;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.y1 < b.y1;
}

Layout canonicalize(const Layout& layout) {
    Layout out = layout;
    std::stable_sort(out.objects.begin(), out.objects.end(), canonical_less);
    return out;
}

bool is_canonical(const Layout& layout) {
    return std::is_sorted(layout.objects.begin(), layout.objects.end(),
                          [](const SceneObject& a, const SceneObject& b) {
                              return canonical_less(a, b);
                          });
}

std::vector<int> patch_membership(const SceneObject& obj, const PatchGrid& grid) {
    std::vector<int> members;
    for (int r = 0; r < grid.rows; r++) {
        double cy = (r + 0.5) / grid.rows;
        if (!(cy >= obj.y1 && cy < obj.y2)) continue;
        for (int c = 0; c < grid.cols; c++) {
            double cx = (c + 0.5) / grid.cols;
            if (cx >= obj.x1 && cx < obj.x2) members.push_back(grid.index(r, c));
        }
    }
    return members;
}

// Shared cover-resolution rule: smallest area wins, ties go to the
// latest object in canonical order.
static void claim_patches(const Layout& layout, const PatchGrid& grid,
                          const std::vector<char>& eligible, std::vector<int>& owner) {
    for (int i = 0; i < layout.size(); i++) {
        if (!eligible[static_cast<size_t>(i)]) continue;
        const SceneObject& obj = layout.objects[static_cast<size_t>(i)];
        for (int p : patch_membership(obj, grid)) {
            int cur = owner[static_cast<size_t>(p)];
            if (cur < 0) {
                owner[static_cast<size_t>(p)] = i;
                continue;
            }
            double cur_area = layout.objects[static_cast<size_t>(cur)].area();
            if (obj.area() < cur_area || (obj.area() == cur_area && i > cur)) {
                owner[static_cast<size_t>(p)] = i;
            }
        }
    }
}

std::vector<int> assign_patch_owner(const Layout& layout, const PatchGrid& grid,
                                    const CategoryTable& categories) {
    if (!is_canonical(layout)) {
        throw std::invalid_argument("assign_patch_owner requires a canonicalized layout");
    }
    std::vector<char> instance(static_cast<size_t>(layout.size()));
    for (int i = 0; i < layout.size(); i++) {
        instance[static_cast<size_t>(i)] =
            categories.is_instance(layout.objects[static_cast<size_t>(i)].category_id);
    }
    std::vector<int> owner(static_cast<size_t>(grid.count()), kStuffOwner);
    claim_patches(layout, grid, instance, owner);
    return owner;
}

std::vector<int> assign_patch_object(const Layout& layout, const PatchGrid& grid,
                                     const CategoryTable& categories) {
    std::vector<int> owner = assign_patch_owner(layout, grid, categories);
    std::vector<char> stuff(static_cast<size_t>(layout.size()));
    for (int i = 0; i < layout.size(); i++) {
        stuff[static_cast<size_t>(i)] =
            !categories.is_instance(layout.objects[static_cast<size_t>(i)].category_id);
    }
    std::vector<int> stuff_owner(static_cast<size_t>(grid.count()), -1);
    claim_patches(layout, grid, stuff, stuff_owner);
    for (int p = 0; p < grid.count(); p++) {
        if (owner[static_cast<size_t>(p)] == kStuffOwner) {
            owner[static_cast<size_t>(p)] = stuff_owner[static_cast<size_t>(p)];
        }
    }
    return owner;
}

// ---------------------------------------------------------------- text I/O

static std::string strip_comment(const std::string& line) {
    size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

Layout parse_layout(const std::string& text, const CategoryTable& categories) {
    Layout layout;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(strip_comment(line));
        std::string name;
        if (!(ls >> name)) continue; // blank or comment-only line
        SceneObject obj;
        if (!(ls >> obj.x1 >> obj.y1 >> obj.x2 >> obj.y2)) {
            throw std::runtime_error("layout line " + std::to_string(line_no) +
                                     ": expected `name x1 y1 x2 y2`");
        }
        obj.category_id = categories.find(name);
        if (obj.category_id < 0) {
            throw std::runtime_error("layout line " + std::to_string(line_no) +
                                     ": unknown category `" + name + "`");
        }
        layout.objects.push_back(obj);
    }
    layout.validate(categories);
    return layout;
}

std::string format_layout(const Layout& layout, const CategoryTable& categories) {
    std::string out;
    char buf[160];
    for (const SceneObject& o : layout.objects) {
        std::snprintf(buf, sizeof(buf), "%s %.17g %.17g %.17g %.17g\n",
                      categories.entries[static_cast<size_t>(o.category_id)].name.c_str(),
                      o.x1, o.y1, o.x2, o.y2);
        out += buf;
    }
    return out;
}

CategoryTable parse_categories(const std::string& text) {
    CategoryTable table;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(strip_comment(line));
        Category cat;
        std::string kind;
        if (!(ls >> cat.name)) continue;
        if (!(ls >> kind >> cat.texture_id)) {
            throw std::runtime_error("category line " + std::to_string(line_no) +
                                     ": expected `name kind texture_id`");
        }
        if (kind == "instance") {
            cat.kind = CategoryKind::Instance;
        } else if (kind == "stuff") {
            cat.kind = CategoryKind::Stuff;
        } else {
            throw std::runtime_error("category line " + std::to_string(line_no) +
                                     ": kind must be `instance` or `stuff`");
        }
        table.entries.push_back(cat);
    }
    table.validate();
    return table;
}

std::string format_categories(const CategoryTable& categories) {
    std::string out;
    for (const Category& c : categories.entries) {
        out += c.name;
        out += c.kind == CategoryKind::Instance ? " instance " : " stuff ";
        out += std::to_string(c.texture_id);
        out += '\n';
    }
    return out;
}

static std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Layout load_layout(const std::string& path, const CategoryTable& categories) {
    return parse_layout(read_text_file(path), categories);
}

void save_layout(const std::string& path, const Layout& layout,
                 const CategoryTable& categories) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    f << format_layout(layout, categories);
}

CategoryTable load_categories(const std::string& path) {
    return parse_categories(read_text_file(path));
}

void save_categories(const std::string& path, const CategoryTable& categories) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    f << format_categories(categories);
}

} // namespace focal
