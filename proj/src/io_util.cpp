#include "eqmt/io_util.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace eqmt {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read error: " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write error: " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (in.bad()) throw std::runtime_error("read error: " + path.string());
  return lines;
}

void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f32(std::string& buf, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(buf, bits);
}

void put_f64(std::string& buf, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(buf, bits);
}

static void need(std::string_view buf, std::size_t off, std::size_t n) {
  if (off + n > buf.size()) throw std::runtime_error("truncated binary data");
}

std::uint32_t get_u32(std::string_view buf, std::size_t& off) {
  need(buf, off, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[off + i])) << (8 * i);
  off += 4;
  return v;
}

std::uint64_t get_u64(std::string_view buf, std::size_t& off) {
  need(buf, off, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[off + i])) << (8 * i);
  off += 8;
  return v;
}

float get_f32(std::string_view buf, std::size_t& off) {
  std::uint32_t bits = get_u32(buf, off);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

double get_f64(std::string_view buf, std::size_t& off) {
  std::uint64_t bits = get_u64(buf, off);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

std::string format_g6(double v) {
  char tmp[64];
  std::snprintf(tmp, sizeof(tmp), "%.6g", v);
  return tmp;
}

}  // namespace eqmt
