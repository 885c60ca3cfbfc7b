#include "gconj/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "gconj/canonical.hpp"
#include "gconj/graph6.hpp"

namespace gconj {

namespace {

[[noreturn]] void malformed(const std::string& path, int line,
                            const std::string& reason) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + reason);
}

bool parse_value(const std::string& text, ExtendedReal& out) {
  if (text == "undef") {
    out = ExtendedReal::undefined();
    return true;
  }
  if (text == "inf") {
    out = ExtendedReal::pos_inf();
    return true;
  }
  if (text == "-inf") {
    out = ExtendedReal::neg_inf();
    return true;
  }
  if (text.empty()) return false;
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || std::isnan(v) ||
      std::isinf(v))
    return false;
  out = ExtendedReal::finite(v);
  return true;
}

bool parse_exactness(const std::string& text, bool& exact, double& tol) {
  if (text == "exact") {
    exact = true;
    tol = 0.0;
    return true;
  }
  constexpr std::string_view prefix = "approx:";
  if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0)
    return false;
  std::string num = text.substr(prefix.size());
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(num.c_str(), &end);
  if (end != num.c_str() + num.size() || errno == ERANGE || !(v >= 0) ||
      !std::isfinite(v))
    return false;
  exact = false;
  tol = v;
  return true;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void write_record(std::string& out, const std::string& graph_key,
                  const std::string& invariant,
                  const ValueTable::Cell& cell) {
  out += graph_key;
  out += ',';
  out += invariant;
  out += ',';
  out += encode_store_value(cell.value);
  out += ',';
  if (cell.exact) {
    out += "exact";
  } else {
    char buf[48];
    std::snprintf(buf, sizeof buf, "approx:%.17g", cell.tolerance);
    out += buf;
  }
  if (!cell.tool.empty()) {
    out += ',';
    out += cell.tool;
  }
  out += '\n';
}

class LockedFd {
public:
  LockedFd(const std::string& path, int flags) : path_(path) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ < 0)
      throw std::system_error(errno, std::generic_category(),
                              "cannot open store " + path);
    if (::flock(fd_, LOCK_EX) != 0) {
      int err = errno;
      ::close(fd_);
      fd_ = -1;
      throw std::system_error(err, std::generic_category(),
                              "cannot lock store " + path);
    }
  }
  ~LockedFd() { release(); }
  int take() {
    int fd = fd_;
    fd_ = -1;
    return fd;
  }
  int fd() const { return fd_; }
  void release() {
    if (fd_ >= 0) ::close(fd_);  // closing drops the flock
    fd_ = -1;
  }

private:
  int fd_ = -1;
  std::string path_;
};

void write_all(int fd, const std::string& data, const std::string& path) {
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::system_error(errno, std::generic_category(),
                              "cannot write store " + path);
    }
    done += static_cast<std::size_t>(n);
  }
}

}  // namespace

std::string encode_store_value(ExtendedReal v) {
  if (v.is_undefined()) return "undef";
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  double d = v.raw();
  if (d == std::floor(d) && std::fabs(d) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(d));
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

ValueTable load_table(const std::string& path) {
  ValueTable table;
  std::ifstream in(path);
  if (!in.is_open()) {
    if (::access(path.c_str(), F_OK) != 0) return table;  // not created yet
    throw std::runtime_error("cannot read store " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split_fields(line);
    if (f.size() != 4 && f.size() != 5)
      malformed(path, lineno, "expected 4 or 5 comma-separated fields, got " +
                                  std::to_string(f.size()));
    if (f[1].empty()) malformed(path, lineno, "empty invariant name");

    Graph g(0);
    try {
      g = parse_graph6(f[0]);
    } catch (const std::exception& e) {
      malformed(path, lineno, "bad graph6 key: " + std::string(e.what()));
    }
    std::string key = table_key(g);  // merges isomorphic records

    ValueTable::Cell cell;
    if (!parse_value(f[2], cell.value))
      malformed(path, lineno, "bad value '" + f[2] + "'");
    if (!parse_exactness(f[3], cell.exact, cell.tolerance))
      malformed(path, lineno, "bad exactness '" + f[3] + "'");
    if (f.size() == 5) cell.tool = f[4];
    table.put(std::move(key), f[1], std::move(cell));  // last write wins
  }
  return table;
}

void save_table(const ValueTable& table, const std::string& path) {
  std::string data(kStoreHeader);
  data += '\n';
  table.for_each([&](const std::string& key, const std::string& invariant,
                     const ValueTable::Cell& cell) {
    write_record(data, key, invariant, cell);
  });

  LockedFd lock(path, O_WRONLY | O_CREAT);
  if (::ftruncate(lock.fd(), 0) != 0)
    throw std::system_error(errno, std::generic_category(),
                            "cannot truncate store " + path);
  write_all(lock.fd(), data, path);
}

StoreWriter::StoreWriter(const std::string& path) : path_(path) {
  LockedFd lock(path, O_WRONLY | O_CREAT | O_APPEND);
  struct stat st{};
  if (::fstat(lock.fd(), &st) != 0)
    throw std::system_error(errno, std::generic_category(),
                            "cannot stat store " + path);
  if (st.st_size == 0) {
    std::string header(kStoreHeader);
    header += '\n';
    write_all(lock.fd(), header, path);
  }
  fd_ = lock.take();  // keep fd (and its flock) for the writer's lifetime
}

StoreWriter::~StoreWriter() {
  if (fd_ >= 0) ::close(fd_);
}

void StoreWriter::append(std::string_view graph_key, std::string_view invariant,
                         const ValueTable::Cell& cell) {
  std::string record;
  write_record(record, std::string(graph_key), std::string(invariant), cell);
  write_all(fd_, record, path_);
}

InvariantValue ensure_logged(ValueTable& table, const Graph& g,
                             std::string_view invariant, StoreWriter* log) {
  std::string key = table_key(g);
  if (const ValueTable::Cell* hit = table.find(key, invariant))
    return {hit->value, hit->exact, hit->tolerance};
  InvariantValue v = table.ensure(g, invariant);
  if (log != nullptr)
    log->append(key, invariant,
                ValueTable::Cell{v.value, v.exact, v.tolerance, {}});
  return v;
}

}  // namespace gconj
