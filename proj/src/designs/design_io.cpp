#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ekr/design.hpp"
#include "ekr/error.hpp"

namespace ekr {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line_no);
    out.push_back(value);
  }
  return out;
}

}  // namespace

Design read_design(std::istream& in) {
  std::string line;
  int line_no = 0;
  int v = -1, k = -1;
  std::vector<std::vector<int>> blocks;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto nums = parse_ints(line, line_no);
    if (v < 0) {
      if (nums.size() != 2) throw ParseError("header must be 'v k'", line_no);
      if (nums[0] < 1 || nums[1] < 1 || nums[0] > 1'000'000 || nums[1] > nums[0]) {
        throw ParseError("header values out of range", line_no);
      }
      v = static_cast<int>(nums[0]);
      k = static_cast<int>(nums[1]);
      continue;
    }
    if (static_cast<int>(nums.size()) != k) {
      throw ParseError("block has " + std::to_string(nums.size()) + " points, expected " +
                           std::to_string(k),
                       line_no);
    }
    std::vector<int> blk;
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (nums[i] < 0 || nums[i] >= v) {
        throw ParseError("point " + std::to_string(nums[i]) + " out of range", line_no);
      }
      if (i > 0 && nums[i] <= nums[i - 1]) {
        throw ParseError("block points must be strictly increasing", line_no);
      }
      blk.push_back(static_cast<int>(nums[i]));
    }
    blocks.push_back(std::move(blk));
  }
  if (v < 0) throw ParseError("missing 'v k' header", line_no);
  return Design::validate(v, k, std::move(blocks));
}

void write_design(std::ostream& out, const Design& design) {
  out << design.v() << ' ' << design.k() << '\n';
  for (const auto& blk : design.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
}

Design load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_design(in);
}

void save_design(const Design& design, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  write_design(out, design);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace ekr
