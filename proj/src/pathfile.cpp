#include "pathfile.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace sfc3 {

namespace {

constexpr char kMagic[4] = {'S', 'F', 'C', '3'};
constexpr uint8_t kVersion = 0x01;

void write_u32_le(std::ostream& out, uint32_t v) {
  const std::array<char, 4> bytes{char(v & 0xff), char((v >> 8) & 0xff),
                                  char((v >> 16) & 0xff), char((v >> 24) & 0xff)};
  out.write(bytes.data(), bytes.size());
}

uint32_t read_u32_le(const unsigned char* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

void save_csv(const CurvePath& path, std::ostream& out) {
  out << "rank,slab,row,col\n";
  for (size_t rank = 0; rank < path.cells.size(); ++rank) {
    const Coord3& c = path.cells[rank];
    out << rank << ',' << c.slab << ',' << c.row << ',' << c.col << '\n';
  }
}

void save_json(const CurvePath& path, std::string_view order_label, std::ostream& out) {
  nlohmann::json doc;
  doc["dims"] = {path.dims.slabs, path.dims.rows, path.dims.cols};
  doc["order"] = std::string(order_label);
  nlohmann::json cells = nlohmann::json::array();
  for (const Coord3& c : path.cells) {
    cells.push_back({c.slab, c.row, c.col});
  }
  doc["cells"] = std::move(cells);
  out << doc.dump() << '\n';
}

void save_binary(const CurvePath& path, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  out.put(char(kVersion));
  write_u32_le(out, path.dims.slabs);
  write_u32_le(out, path.dims.rows);
  write_u32_le(out, path.dims.cols);
  for (const Coord3& c : path.cells) {
    write_u32_le(out, c.slab);
    write_u32_le(out, c.row);
    write_u32_le(out, c.col);
  }
}

uint32_t parse_u32_field(std::string_view field, const char* what, size_t line_no) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      value > std::numeric_limits<uint32_t>::max()) {
    std::ostringstream msg;
    msg << "csv: bad " << what << " on line " << line_no;
    throw error(errc::parse, msg.str());
  }
  return uint32_t(value);
}

LoadedPath load_csv(std::istream& in, const std::optional<Dims3>& dims) {
  if (!dims) {
    throw error(errc::invalid_argument, "csv path files carry no extents; dims required");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw error(errc::parse, "csv: missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "rank,slab,row,col") {
    throw error(errc::parse, "csv: unexpected header");
  }

  LoadedPath loaded;
  loaded.path.dims = *dims;
  size_t line_no = 1;
  uint64_t expected_rank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::array<std::string_view, 4> fields;
    std::string_view rest = line;
    for (size_t i = 0; i < 4; ++i) {
      const size_t comma = rest.find(',');
      if (i < 3) {
        if (comma == std::string_view::npos) {
          throw error(errc::parse, "csv: expected 4 fields on line " + std::to_string(line_no));
        }
        fields[i] = rest.substr(0, comma);
        rest = rest.substr(comma + 1);
      } else {
        if (comma != std::string_view::npos) {
          throw error(errc::parse, "csv: too many fields on line " + std::to_string(line_no));
        }
        fields[i] = rest;
      }
    }

    uint64_t rank = 0;
    const auto [ptr, ec] =
        std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), rank);
    if (ec != std::errc() || ptr != fields[0].data() + fields[0].size()) {
      throw error(errc::parse, "csv: bad rank on line " + std::to_string(line_no));
    }
    if (rank != expected_rank) {
      throw error(errc::parse, "csv: rank out of sequence on line " + std::to_string(line_no));
    }
    ++expected_rank;

    loaded.path.cells.push_back(Coord3{parse_u32_field(fields[1], "slab", line_no),
                                       parse_u32_field(fields[2], "row", line_no),
                                       parse_u32_field(fields[3], "col", line_no)});
  }
  return loaded;
}

Dims3 dims_from_json(const nlohmann::json& value) {
  if (!value.is_array() || value.size() != 3) {
    throw error(errc::parse, "json: dims must be a 3-element array");
  }
  for (const auto& v : value) {
    if (!v.is_number_unsigned() || v.get<uint64_t>() == 0 ||
        v.get<uint64_t>() > std::numeric_limits<uint32_t>::max()) {
      throw error(errc::parse, "json: dims entries must be positive 32-bit integers");
    }
  }
  return Dims3(value[0].get<uint32_t>(), value[1].get<uint32_t>(),
               value[2].get<uint32_t>());
}

LoadedPath load_json(std::istream& in, const std::optional<Dims3>& dims) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse, std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("cells")) {
    throw error(errc::parse, "json: expected object with dims and cells");
  }

  LoadedPath loaded;
  loaded.path.dims = dims ? *dims : dims_from_json(doc["dims"]);
  if (doc.contains("order") && doc["order"].is_string()) {
    loaded.order_label = doc["order"].get<std::string>();
  }
  const nlohmann::json& cells = doc["cells"];
  if (!cells.is_array()) {
    throw error(errc::parse, "json: cells must be an array");
  }
  loaded.path.cells.reserve(cells.size());
  for (const auto& entry : cells) {
    if (!entry.is_array() || entry.size() != 3) {
      throw error(errc::parse, "json: each cell must be a 3-element array");
    }
    for (const auto& v : entry) {
      if (!v.is_number_unsigned() ||
          v.get<uint64_t>() > std::numeric_limits<uint32_t>::max()) {
        throw error(errc::parse, "json: cell entries must be unsigned 32-bit integers");
      }
    }
    loaded.path.cells.push_back(Coord3{entry[0].get<uint32_t>(), entry[1].get<uint32_t>(),
                                       entry[2].get<uint32_t>()});
  }
  return loaded;
}

LoadedPath load_binary(std::istream& in, const std::optional<Dims3>& dims) {
  std::array<unsigned char, 17> header;
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != std::streamsize(header.size())) {
    throw error(errc::parse, "binary: truncated header");
  }
  if (std::memcmp(header.data(), kMagic, sizeof(kMagic)) != 0) {
    throw error(errc::parse, "binary: bad magic");
  }
  if (header[4] != kVersion) {
    throw error(errc::parse, "binary: unsupported format version");
  }
  const uint32_t slabs = read_u32_le(header.data() + 5);
  const uint32_t rows = read_u32_le(header.data() + 9);
  const uint32_t cols = read_u32_le(header.data() + 13);
  if (slabs == 0 || rows == 0 || cols == 0) {
    throw error(errc::parse, "binary: zero extent in header");
  }

  LoadedPath loaded;
  loaded.path.dims = dims ? *dims : Dims3(slabs, rows, cols);
  std::array<unsigned char, 12> record;
  while (in.read(reinterpret_cast<char*>(record.data()), record.size())) {
    loaded.path.cells.push_back(Coord3{read_u32_le(record.data()),
                                       read_u32_le(record.data() + 4),
                                       read_u32_le(record.data() + 8)});
  }
  if (in.gcount() != 0) {
    throw error(errc::parse, "binary: truncated record");
  }
  return loaded;
}

}  // namespace

const char* to_string(PathFormat fmt) {
  switch (fmt) {
    case PathFormat::Csv: return "csv";
    case PathFormat::Json: return "json";
    case PathFormat::Binary: return "bin";
  }
  return "?";
}

std::optional<PathFormat> path_format_from_string(std::string_view name) {
  if (name == "csv") return PathFormat::Csv;
  if (name == "json") return PathFormat::Json;
  if (name == "bin") return PathFormat::Binary;
  return std::nullopt;
}

void save_path(const CurvePath& path, std::string_view order_label, PathFormat fmt,
               std::ostream& out) {
  switch (fmt) {
    case PathFormat::Csv: save_csv(path, out); break;
    case PathFormat::Json: save_json(path, order_label, out); break;
    case PathFormat::Binary: save_binary(path, out); break;
  }
  out.flush();
  if (!out) {
    throw error(errc::io, "save_path: write failed");
  }
}

void save_path_file(const CurvePath& path, std::string_view order_label, PathFormat fmt,
                    const std::string& filename) {
  if (filename == "-") {
    save_path(path, order_label, fmt, std::cout);
    return;
  }
  std::ofstream out(filename, std::ios::binary);
  if (!out) {
    throw error(errc::io, "cannot open for writing: " + filename);
  }
  save_path(path, order_label, fmt, out);
}

LoadedPath load_path(std::istream& in, const std::optional<Dims3>& dims) {
  // Detect the format from the first byte(s): binary magic, then JSON.
  const int first = in.peek();
  if (first == std::char_traits<char>::eof()) {
    throw error(errc::parse, "empty path file");
  }
  if (first == kMagic[0]) {
    return load_binary(in, dims);
  }
  if (first == '{' || first == '[' || first == ' ' || first == '\t' || first == '\n' ||
      first == '\r') {
    return load_json(in, dims);
  }
  return load_csv(in, dims);
}

LoadedPath load_path_file(const std::string& filename, const std::optional<Dims3>& dims) {
  if (filename == "-") {
    return load_path(std::cin, dims);
  }
  std::ifstream in(filename, std::ios::binary);
  if (!in) {
    throw error(errc::io, "cannot open for reading: " + filename);
  }
  return load_path(in, dims);
}

}  // namespace sfc3
