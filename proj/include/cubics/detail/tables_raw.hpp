#pragma once

namespace cubics::detail {

// Compact build-time encoding of the embedded generator tables.  The public
// structured types are built from these in tables.cpp.

struct RawTerm {
  int kind;  // 0 = L, 1 = Li(a), 2 = Lij(a,b), 3 = B(a), 4 = row reference a
  int a;
  int b;
};

struct RawReason {
  int kind;  // 0 = degree annotation, 1 = decomposition
  int deg;
  int nterms;
  RawTerm t[3];
};

struct RawRow1 {
  int idx;
  int c[7];
};

struct RawRow2 {
  int idx;
  int c[7];
  RawReason r;
};

struct RawRow3 {
  int idx;
  int c[7];
  int pk;  // annotated pencil kind: 0 = Li(pi), 1 = B(pi)
  int pi;
};

constexpr RawTerm TL() { return {0, 0, 0}; }
constexpr RawTerm TLi(int i) { return {1, i, 0}; }
constexpr RawTerm TLij(int i, int j) { return {2, i, j}; }
constexpr RawTerm TB(int i) { return {3, i, 0}; }
constexpr RawTerm TRow(int k) { return {4, k, 0}; }

constexpr RawReason RD(int c) { return {0, c, 0, {}}; }
constexpr RawReason RS(RawTerm a, RawTerm b) { return {1, 0, 2, {a, b, {}}}; }
constexpr RawReason RS(RawTerm a, RawTerm b, RawTerm c) { return {1, 0, 3, {a, b, c}}; }

extern const RawRow1 kTable1[99];
extern const RawRow2 kTable2[99];
extern const RawRow3 kTable3[99];

}  // namespace cubics::detail
