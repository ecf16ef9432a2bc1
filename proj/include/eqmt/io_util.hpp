#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace eqmt {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Lines with trailing '\r' stripped; a trailing newline does not produce an
// extra empty line.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Little-endian binary primitives, appended to / read from a byte buffer.
void put_u32(std::string& buf, std::uint32_t v);
void put_u64(std::string& buf, std::uint64_t v);
void put_f32(std::string& buf, float v);
void put_f64(std::string& buf, double v);

std::uint32_t get_u32(std::string_view buf, std::size_t& off);
std::uint64_t get_u64(std::string_view buf, std::size_t& off);
float get_f32(std::string_view buf, std::size_t& off);
double get_f64(std::string_view buf, std::size_t& off);

// "%.6g" formatting used by all text artifacts so outputs are byte-stable.
std::string format_g6(double v);

}  // namespace eqmt
