#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hetpre/common.hpp"

namespace hetpre {

// Relation declared by the user: aggregates from dst-type columns into
// src-type rows. Bidirectional semantics require declaring both directions.
struct RelationDecl {
  std::string name;
  std::string src_type;
  std::string dst_type;
};

struct Relation {
  std::string name;
  int src_type = -1;
  int dst_type = -1;
  bool is_self = false;
};

// Object types plus relations, with one auto-generated dummy self-relation
// per object type appended after the user relations. Heterogeneity condition:
// |types| + |relations| > 2 counting self-relations.
class HinSchema {
 public:
  static HinSchema create(std::vector<std::string> object_types,
                          std::vector<RelationDecl> relations);

  int num_types() const { return static_cast<int>(types_.size()); }
  int num_relations() const { return static_cast<int>(relations_.size()); }
  int num_user_relations() const { return num_user_; }

  const std::string& type_name(int t) const { return types_[t]; }
  const Relation& relation(int r) const { return relations_[r]; }
  const std::vector<Relation>& relations() const { return relations_; }

  int type_id(const std::string& name) const;           // -1 if absent
  int relation_id(const std::string& name) const;       // -1 if absent
  int self_relation_of(int type) const { return num_user_ + type; }

  // Non-self relations aggregating into the given type.
  const std::vector<int>& relations_of_source(int type) const {
    return by_source_[type];
  }

  // Canonical text form; stable across runs. Feeds the checkpoint hash.
  std::string canonical_string() const;
  std::uint64_t hash() const;

 private:
  std::vector<std::string> types_;
  std::vector<Relation> relations_;
  std::vector<std::vector<int>> by_source_;
  int num_user_ = 0;
};

// Compressed sparse rows; rows are aggregating objects, cols neighbors.
struct Csr {
  Index rows = 0;
  Index cols = 0;
  std::vector<Index> row_ptr;  // size rows + 1
  std::vector<Index> col;      // ascending within each row
  std::vector<double> val;     // normalized link weights

  Index nnz() const { return static_cast<Index>(col.size()); }
  Index degree(Index row) const { return row_ptr[row + 1] - row_ptr[row]; }
};

struct Edge {
  Index src = 0;
  Index dst = 0;
  double weight = 1.0;
};

enum class NormMode { Row, Symmetric };

// Immutable after construction; safe for concurrent reads.
class HinGraph {
 public:
  static HinGraph build(HinSchema schema, std::vector<Index> counts,
                        const std::vector<std::vector<Edge>>& edge_lists,
                        NormMode norm = NormMode::Row);

  const HinSchema& schema() const { return schema_; }
  NormMode norm_mode() const { return norm_; }

  Index count(int type) const { return counts_[type]; }
  const std::vector<Index>& counts() const { return counts_; }
  Index num_objects() const { return type_offset_.back(); }
  Index num_edges() const;

  Index globalize(int type, Index local) const;
  std::pair<int, Index> localize(Index global) const;
  int type_of(Index global) const { return localize(global).first; }

  // Adjacency of a non-self relation. Self-relations are implicit identity.
  const Csr& adjacency(int relation) const;

  // Normalized neighbor list of one object, ascending neighbor global id.
  // Self-relation queries return {(object, 1.0)}.
  std::vector<std::pair<Index, double>> neighbors(Index object,
                                                  int relation) const;

 private:
  HinSchema schema_;
  std::vector<Index> counts_;
  std::vector<Index> type_offset_;  // size T+1
  std::vector<Csr> adj_;            // per user relation
  NormMode norm_ = NormMode::Row;
};

// Per-type dense feature matrices, rows aligned with local object ids.
class FeatureSet {
 public:
  FeatureSet() = default;
  FeatureSet(const HinGraph& graph, std::vector<Eigen::MatrixXd> per_type);

  const Eigen::MatrixXd& of_type(int type) const { return mats_[type]; }
  int num_types() const { return static_cast<int>(mats_.size()); }
  std::vector<Index> dims() const;

 private:
  std::vector<Eigen::MatrixXd> mats_;
};

}  // namespace hetpre
