#include "molscope/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace molscope {

namespace {

struct Block {
  int first_line = 0;
  std::vector<std::vector<int>> rows;
};

std::vector<int> parse_row(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  std::vector<int> row;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char ch : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad symbol", line_no);
      row.push_back(ch - '0');
    }
    return row;
  }
  for (const std::string& t : tokens) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 0)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad symbol '" + t + "'", line_no);
    row.push_back(v);
  }
  return row;
}

LatinSquare to_square(const Block& b) {
  const int n = static_cast<int>(b.rows.size());
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    if (static_cast<int>(b.rows[r].size()) != n) {
      const int line = b.first_line + static_cast<int>(r);
      throw Error(ErrorKind::BadShape,
                  "line " + std::to_string(line) + ": expected " + std::to_string(n) + " symbols", line);
    }
  }
  try {
    return validate(b.rows);
  } catch (const Error& e) {
    // Point at the offending row when there is one.
    int line = b.first_line;
    if (e.kind() == ErrorKind::DuplicateInRow || e.kind() == ErrorKind::BadSymbol) line += std::max(e.index(), 0);
    throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.message(), line);
  }
}

}  // namespace

std::vector<LatinSquare> parse_squares(std::string_view text) {
  std::vector<LatinSquare> out;
  std::istringstream in{std::string(text)};
  Block block;
  int line_no = 0;
  auto flush = [&] {
    if (!block.rows.empty()) out.push_back(to_square(block));
    block = Block{};
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    if (first == std::string::npos) {
      flush();
      continue;
    }
    if (block.rows.empty()) block.first_line = line_no;
    block.rows.push_back(parse_row(line, line_no));
  }
  flush();
  return out;
}

MolsList parse_mols(std::string_view text) {
  std::vector<LatinSquare> squares = parse_squares(text);
  if (squares.empty()) throw Error(ErrorKind::Parse, "no squares found");
  return MolsList(std::move(squares));
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

std::vector<LatinSquare> read_squares(const std::filesystem::path& path) {
  try {
    return parse_squares(read_text(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Io) throw;
    throw Error(e.kind(), path.string() + ": " + e.message(), e.index());
  }
}

MolsList read_mols(const std::filesystem::path& path) {
  try {
    return parse_mols(read_text(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Io) throw;
    throw Error(e.kind(), path.string() + ": " + e.message(), e.index());
  }
}

std::string format_square(const LatinSquare& square) {
  std::string out;
  const int n = square.order();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out += ' ';
      out += std::to_string(square(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_mols(const MolsList& mols) {
  std::string out;
  for (int i = 0; i < mols.size(); ++i) {
    if (i) out += '\n';
    out += format_square(mols[i]);
  }
  return out;
}

}  // namespace molscope
