#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace focal {

// FNV-1a 64-bit hash of a byte buffer
uint64_t fnv1a64(const void* data, size_t len);

// FNV-1a 64-bit hash of a file's contents; throws std::runtime_error on I/O error
uint64_t hash_file(const std::string& path);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const void* data, size_t len);

// little-endian scalar I/O helpers for binary formats
void put_u32(std::vector<uint8_t>& out, uint32_t v);
void put_f32(std::vector<uint8_t>& out, float v);
uint32_t get_u32(const std::vector<uint8_t>& in, size_t& pos);
float get_f32(const std::vector<uint8_t>& in, size_t& pos);

} // namespace focal
