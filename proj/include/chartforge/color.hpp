#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chartforge/errors.hpp"
#include "chartforge/util.hpp"

namespace chartforge {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;

    std::string css() const {
        return "rgb(" + std::to_string(r) + "," + std::to_string(g) + "," + std::to_string(b) + ")";
    }

    bool operator==(const Rgb& o) const { return r == o.r && g == o.g && b == o.b; }
};

struct PaletteEntry {
    Rgb rgb;
    std::string name; // canonical color name, from color_vocabulary()
};

struct Palette {
    std::string palette_id;
    std::vector<PaletteEntry> entries;
    Rgb background{255, 255, 255};
};

// Closed color-name vocabulary: the 16 CSS basic names plus light/dark
// variants of blue, green, red and gray. Visual questions and answer
// normalization both resolve against this list, so it never grows ad hoc.
inline const std::vector<std::string>& color_vocabulary() {
    static const std::vector<std::string> v = {
        "black",      "silver",     "gray",      "white",     "maroon",     "red",
        "purple",     "fuchsia",    "green",     "lime",      "olive",      "yellow",
        "navy",       "teal",       "aqua",      "blue",      "light blue", "dark blue",
        "light green","dark green", "light red", "dark red",  "light gray", "dark gray",
    };
    return v;
}

inline bool is_canonical_color(const std::string& name) {
    for (const auto& c : color_vocabulary())
        if (c == name) return true;
    return false;
}

inline const std::vector<Palette>& builtin_palettes() {
    static const std::vector<Palette> palettes = [] {
        std::vector<Palette> out;
        auto make = [&](std::string id, Rgb bg, std::vector<PaletteEntry> entries) {
            Palette p;
            p.palette_id = std::move(id);
            p.background = bg;
            p.entries = std::move(entries);
            out.push_back(std::move(p));
        };
        make("classic", {255, 255, 255},
             {{{31, 119, 180}, "blue"},
              {{214, 39, 40}, "red"},
              {{44, 160, 44}, "green"},
              {{255, 215, 0}, "yellow"},
              {{128, 0, 128}, "purple"},
              {{23, 190, 207}, "aqua"},
              {{128, 128, 0}, "olive"},
              {{0, 0, 0}, "black"}});
        make("deep", {255, 255, 255},
             {{{0, 0, 128}, "navy"},
              {{139, 0, 0}, "dark red"},
              {{0, 100, 0}, "dark green"},
              {{105, 105, 105}, "dark gray"},
              {{128, 0, 0}, "maroon"},
              {{0, 128, 128}, "teal"},
              {{75, 0, 130}, "purple"},
              {{178, 140, 0}, "olive"}});
        make("pastel", {253, 253, 250},
             {{{173, 216, 230}, "light blue"},
              {{144, 238, 144}, "light green"},
              {{255, 160, 160}, "light red"},
              {{211, 211, 211}, "light gray"},
              {{255, 255, 153}, "yellow"},
              {{216, 191, 216}, "purple"},
              {{175, 238, 238}, "aqua"}});
        make("bold", {255, 255, 255},
             {{{255, 0, 0}, "red"},
              {{0, 0, 255}, "blue"},
              {{0, 255, 0}, "lime"},
              {{255, 0, 255}, "fuchsia"},
              {{255, 255, 0}, "yellow"},
              {{0, 255, 255}, "aqua"},
              {{0, 0, 0}, "black"}});
        make("earth", {250, 248, 240},
             {{{128, 0, 0}, "maroon"},
              {{107, 142, 35}, "olive"},
              {{46, 94, 46}, "dark green"},
              {{112, 128, 144}, "gray"},
              {{139, 69, 19}, "dark red"},
              {{85, 107, 47}, "green"},
              {{25, 25, 112}, "navy"}});
        make("ocean", {248, 252, 255},
             {{{0, 105, 148}, "blue"},
              {{0, 206, 209}, "aqua"},
              {{0, 128, 128}, "teal"},
              {{25, 25, 112}, "navy"},
              {{135, 206, 250}, "light blue"},
              {{0, 0, 139}, "dark blue"},
              {{192, 192, 192}, "silver"}});
        make("warm", {255, 253, 248},
             {{{220, 20, 60}, "red"},
              {{255, 200, 87}, "yellow"},
              {{128, 0, 0}, "maroon"},
              {{255, 99, 71}, "light red"},
              {{139, 0, 0}, "dark red"},
              {{184, 134, 11}, "olive"},
              {{105, 105, 105}, "dark gray"}});
        make("cool", {250, 250, 255},
             {{{70, 130, 180}, "blue"},
              {{0, 139, 139}, "teal"},
              {{72, 61, 139}, "navy"},
              {{147, 112, 219}, "purple"},
              {{176, 224, 230}, "light blue"},
              {{32, 178, 170}, "aqua"},
              {{119, 136, 153}, "gray"}});
        make("mono-blue", {255, 255, 255},
             {{{8, 48, 107}, "dark blue"},
              {{33, 102, 172}, "blue"},
              {{146, 197, 222}, "light blue"},
              {{5, 113, 176}, "navy"},
              {{103, 169, 207}, "aqua"},
              {{189, 215, 231}, "silver"},
              {{54, 74, 94}, "dark gray"}});
        make("mono-green", {255, 255, 255},
             {{{0, 68, 27}, "dark green"},
              {{35, 139, 69}, "green"},
              {{161, 217, 155}, "light green"},
              {{116, 196, 118}, "lime"},
              {{0, 109, 44}, "olive"},
              {{199, 233, 192}, "silver"},
              {{60, 80, 60}, "dark gray"}});
        make("contrast", {255, 255, 255},
             {{{0, 0, 0}, "black"},
              {{230, 25, 75}, "red"},
              {{0, 130, 200}, "blue"},
              {{60, 180, 75}, "green"},
              {{245, 230, 66}, "yellow"},
              {{145, 30, 180}, "purple"},
              {{70, 240, 240}, "aqua"},
              {{128, 128, 128}, "gray"}});
        make("slate", {252, 252, 252},
             {{{47, 79, 79}, "dark gray"},
              {{119, 136, 153}, "gray"},
              {{211, 211, 211}, "light gray"},
              {{192, 192, 192}, "silver"},
              {{25, 25, 112}, "navy"},
              {{0, 0, 0}, "black"},
              {{100, 149, 237}, "blue"}});
        return out;
    }();
    return palettes;
}

class PaletteTable {
public:
    PaletteTable() : palettes_(builtin_palettes()) { index(); }

    explicit PaletteTable(std::vector<Palette> palettes) : palettes_(std::move(palettes)) { index(); }

    const Palette& get(const std::string& id) const {
        auto it = by_id_.find(id);
        if (it == by_id_.end()) fail(Errc::not_found, "unknown palette: " + id);
        return palettes_[it->second];
    }

    bool has(const std::string& id) const { return by_id_.count(id) != 0; }

    const std::vector<Palette>& all() const { return palettes_; }

private:
    void index() {
        for (std::size_t i = 0; i < palettes_.size(); ++i) by_id_[palettes_[i].palette_id] = i;
    }

    std::vector<Palette> palettes_;
    std::map<std::string, std::size_t> by_id_;
};

} // namespace chartforge
