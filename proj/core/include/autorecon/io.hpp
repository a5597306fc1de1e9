#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "autorecon/moments.hpp"
#include "autorecon/spectral.hpp"

namespace autorecon {

enum class GridFormat { json, csv };

/// {"dims": [...], "values": ["p/q", ...]} with values row-major.
std::string grid_to_json(const RatFn& f);
RatFn grid_from_json(std::string_view text);
/// First line the dims, then one line per run of the last coordinate.
std::string grid_to_csv(const RatFn& f);
RatFn grid_from_csv(std::string_view text);

/// {"dims", "max_order", "entries": [{"shifts": [[..], ..], "value": "p/q"}]}
/// sorted by order then shifts; zero entries omitted.
std::string moments_to_json(const MomentTable& table);
MomentTable moments_from_json(std::string_view text);

/// Nonzero transform values as power-basis coefficient strings.
std::string spectrum_to_json(const SpecFn& F);

/// True if the JSON document looks like a moment file rather than a grid.
bool is_moment_document(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

RatFn read_grid(const std::filesystem::path& path, GridFormat format = GridFormat::json);
void write_grid(const std::filesystem::path& path, const RatFn& f, GridFormat format = GridFormat::json);

}  // namespace autorecon
