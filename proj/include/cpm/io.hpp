// SPDX-License-Identifier: Apache-2.0

#ifndef CPM_IO_HPP
#define CPM_IO_HPP

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cpm/sequence.hpp"

namespace cpm {

/// A file could not be opened or read.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raw bytes: a single trailing line break ("\n" or "\r\n") is dropped.
inline Sequence parse_raw(std::string_view bytes) {
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);
  return Sequence::from_bytes(bytes);
}

/// FASTA: '>' header lines are skipped, the remaining lines are concatenated
/// without line breaks or surrounding whitespace and uppercased.
inline Sequence parse_fasta(std::string_view bytes) {
  std::string residues;
  residues.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) eol = bytes.size();
    std::string_view line = bytes.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.front() == '>') continue;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      residues.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  return Sequence::from_bytes(residues);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path.string() + "'");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw io_error("cannot read '" + path.string() + "'");
  return data;
}

inline Sequence ingest(std::string_view bytes, bool fasta) {
  return fasta ? parse_fasta(bytes) : parse_raw(bytes);
}

inline Sequence ingest_file(const std::filesystem::path& path, bool fasta) {
  return ingest(read_file(path), fasta);
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw io_error("cannot write '" + path.string() + "'");
}

/// Inverse of ingest_file in raw mode.
inline void write_sequence(const std::filesystem::path& path, const Sequence& s) {
  write_file(path, s.to_string() + "\n");
}

}  // namespace cpm

#endif  // CPM_IO_HPP
