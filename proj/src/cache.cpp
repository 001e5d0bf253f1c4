#include "hankel/cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hankel/special.hpp"

namespace hankel {
namespace {

bool parse_record(const std::string& line, ZetaRecord& rec) {
  std::stringstream ss(line);
  std::string f0, f1, f2, f3, extra;
  if (!std::getline(ss, f0, ',') || !std::getline(ss, f1, ',') ||
      !std::getline(ss, f2, ',') || !std::getline(ss, f3, ',')) {
    return false;
  }
  if (std::getline(ss, extra, ',')) return false;
  try {
    rec.s = std::stol(f0);
    rec.digits = std::stol(f1);
    rec.significand = f2;
    rec.exponent10 = std::stol(f3);
  } catch (const std::exception&) {
    return false;
  }
  if (rec.s < 2 || rec.digits < 1 || rec.significand.empty()) return false;
  for (size_t i = 0; i < rec.significand.size(); ++i) {
    char c = rec.significand[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-'))) {
      return false;
    }
  }
  return true;
}

std::vector<ZetaRecord> read_file(const std::string& path, long& malformed) {
  std::vector<ZetaRecord> recs;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ZetaRecord rec;
    if (parse_record(line, rec)) {
      recs.push_back(std::move(rec));
    } else {
      ++malformed;
    }
  }
  return recs;
}

void write_file(const std::string& path, std::vector<ZetaRecord> recs) {
  std::sort(recs.begin(), recs.end(), [](const ZetaRecord& a, const ZetaRecord& b) {
    return a.s != b.s ? a.s < b.s : a.digits < b.digits;
  });
  std::ofstream out(path, std::ios::trunc);
  for (const auto& r : recs) {
    out << r.s << ',' << r.digits << ',' << r.significand << ',' << r.exponent10
        << '\n';
  }
}

}  // namespace

CacheReport cache_load(const std::string& path) {
  CacheReport rep;
  for (const auto& rec : read_file(path, rep.malformed)) {
    zeta_store_seed(rec);
    ++rep.loaded;
  }
  if (rep.malformed > 0) {
    rep.notes.push_back(std::to_string(rep.malformed) + " malformed line(s) skipped");
  }
  return rep;
}

void cache_save(const std::string& path) { write_file(path, zeta_store_records()); }

CacheReport cache_validate_and_repair(const std::string& path) {
  CacheReport rep;
  auto recs = read_file(path, rep.malformed);
  std::vector<ZetaRecord> good;
  for (const auto& rec : recs) {
    ++rep.loaded;
    if (zeta_store_validate(rec)) {
      good.push_back(rec);
    } else {
      ++rep.evicted;
      rep.notes.push_back("evicted corrupt cache entry s=" + std::to_string(rec.s) +
                          " digits=" + std::to_string(rec.digits) +
                          " (re-derivation mismatch)");
    }
  }
  if (rep.evicted > 0) write_file(path, good);
  return rep;
}

}  // namespace hankel
