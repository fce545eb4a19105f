#ifndef SKETCHMATCH_FILEIO_HPP
#define SKETCHMATCH_FILEIO_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace sketchmatch {

/// Reads a whole file as bytes. Throws IoError on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes bytes to `path` via a temporary file in the same directory,
/// renamed into place on success, so readers never see partial output.
/// Throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

} // namespace sketchmatch

#endif
