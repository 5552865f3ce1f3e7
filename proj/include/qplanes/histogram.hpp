#pragma once

// Exact plane histogram of a point set with no three collinear points.
//
// Every triple i < j < k spans a plane; its covector is reduced to a primitive
// integer vector whose first nonzero entry is positive (a bijection with the
// rational PlaneKey form). Triples are partitioned across workers by their
// smallest index; each worker sorts and run-length encodes its keys, then
// recounts the points on each of its planes. Merging sums triple
// multiplicities and takes the keywise max of point counts, so the result does
// not depend on the number of workers. A plane with k points must receive
// exactly C(k, 3) triples; the two derivations are checked against each other.

#include "qplanes/errors.hpp"
#include "qplanes/geom.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qplanes {

using IntCovector = std::array<std::int64_t, 4>;

struct PlaneEntry {
  IntCovector key;
  std::uint32_t points = 0;
  std::uint64_t triples = 0;

  friend bool operator==(const PlaneEntry &, const PlaneEntry &) = default;
};

struct CollinearTriple {
  std::size_t i, j, k;
};

// Thrown when a collinear triple is found mid-run.
class CollinearError : public PreconditionError {
public:
  CollinearError(CollinearTriple triple, const std::string &what)
      : PreconditionError(what), triple_(triple)
  {
  }
  CollinearTriple triple() const { return triple_; }

private:
  CollinearTriple triple_;
};

class PlaneHistogram {
public:
  std::size_t source_size() const { return integer_points_.size(); }
  const std::vector<PlaneEntry> &entries() const { return entries_; }

  PlaneKey plane_key(const PlaneEntry &entry) const;
  bool contains(const PlaneEntry &entry, std::size_t point_index) const;

  std::uint64_t count_with_size(std::uint32_t k) const;
  std::uint64_t ordinary_planes() const { return count_with_size(3); }
  std::uint64_t four_point_planes() const { return count_with_size(4); }
  // Sum over planes of C(k, 4).
  std::uint64_t coplanar_quadruples() const;
  std::uint32_t max_plane_size() const;
  // Sum over planes of C(k, 3).
  std::uint64_t triple_total() const;

  // 16 hex digits, FNV-1a over the sorted (key, count) table.
  std::string digest() const;

  // "plane_key,count" rows, plane_key in rational form (first nonzero 1).
  std::string to_csv() const;

private:
  friend PlaneHistogram plane_histogram(std::span<const HPoint>, unsigned);
  std::vector<IntCovector> integer_points_;
  std::vector<PlaneEntry> entries_;
};

// Throws CollinearError on a collinear (or repeated) triple and
// PreconditionError when primitive integer coordinates exceed 2^40 or a
// reduced plane covector does not fit in 64 bits (always fits below 2^20).
PlaneHistogram plane_histogram(std::span<const HPoint> points, unsigned jobs = 1);

// Primitive integer representative with first nonzero entry positive.
IntCovector primitive_integer_vector(const HPoint &p);

}  // namespace qplanes
