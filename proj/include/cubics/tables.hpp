#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubics/cones.hpp"

namespace cubics {

/// One summand of a decomposition annotation: a named standard class or a
/// back-reference to another row of the same table.
struct Term {
  enum class Kind { ClassRef, RowRef };
  Kind kind = Kind::ClassRef;
  ClassName name{};
  int row = 0;

  static Term class_ref(ClassName n) { return Term{Kind::ClassRef, n, 0}; }
  static Term row_ref(int k) { return Term{Kind::RowRef, ClassName{}, k}; }
};

/// Annotation of a generator row: either the degree identity
/// pair(L1, D_n) = c, or a decomposition of D_n into two or three nef
/// summands.
struct Reason {
  enum class Kind { DegreeEquals, Decomposition };
  Kind kind = Kind::DegreeEquals;
  Int degree = 0;
  std::vector<Term> terms;

  static Reason degree_equals(long c) { return Reason{Kind::DegreeEquals, Int(c), {}}; }
  static Reason decomposition(std::vector<Term> t) { return Reason{Kind::Decomposition, 0, std::move(t)}; }
};

struct TableRow {
  int table_id = 0;                 // 1, 2 or 3
  int index = 0;                    // 1..99, unique within a table
  DivisorClass cls;
  std::optional<Reason> reason;     // table 2 rows
  std::optional<ClassName> pencil;  // table 3 rows: a subcone also generated by the row
};

/// The embedded rows of the given table, in row order.  Table 1 lists the
/// nef cone generators, table 2 the generators of the L1 subcone with their
/// annotations, table 3 the generators of the hyperplane subcone.  Throws
/// std::out_of_range for any other id.
const std::vector<TableRow>& table_rows(int id);

struct RowVerdict {
  int table_id = 0;
  int index = 0;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  bool pass = true;
  std::vector<RowVerdict> verdicts;
  std::vector<DivisorClass> missing;  // table rows the engine did not produce
  std::vector<DivisorClass> extra;    // engine rays absent from the table
};

/// Set equality (order-insensitive, primitive vectors) between the embedded
/// table and the corresponding computed cone: the nef cone for table 1, the
/// L1 pencil subcone for table 2, the hyperplane subcone for table 3.
VerificationReport verify_table(int id);

/// Row-by-row verification of the annotations.  For table 2: the degree
/// identities, the decomposition sums, and pair(D_n, L1) equal to the
/// Seshadri constant of D_n.  For table 3: pair(G_n, C) = pair(G_n, h)/2 for
/// the annotated pencil C, membership of G_n among the extreme rays of the
/// C subcone, and the Seshadri constant equal to pair(G_n, h)/2.
VerificationReport verify_reasons();

}  // namespace cubics
