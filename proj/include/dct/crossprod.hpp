#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dct/indexing.hpp"

namespace dct {

/// A morphism of the crossed product: either a 2-cell of the horizontal
/// 2-category (globular, carried by identity frames), or a sliding class
/// of triples (up, frame, down) with a non-identity frame, where up ends
/// at the horizontal identity of the frame's source and down starts at the
/// horizontal identity of its target.
struct Square {
    enum class Kind { Globular, Framed };
    Kind kind = Kind::Globular;
    Id cell;                // globular payload
    Id up, frame, down;     // framed payload

    static Square globular(Id c) {
        Square s;
        s.kind = Kind::Globular;
        s.cell = std::move(c);
        return s;
    }
    static Square framed(Id up, Id frame, Id down) {
        Square s;
        s.kind = Kind::Framed;
        s.up = std::move(up);
        s.frame = std::move(frame);
        s.down = std::move(down);
        return s;
    }

    bool operator==(const Square&) const = default;

    [[nodiscard]] Id id() const {
        return kind == Kind::Globular ? cell : up + "|" + frame + "|" + down;
    }
};

/// A square of a materialized model, with its full boundary: top and
/// bottom horizontal 1-cells, left and right vertical frames.
struct ModelSquare {
    Id id;
    Square sq;
    Id top, bottom;  // 1-cells
    Id left, right;  // morphisms of the object category

    bool operator==(const ModelSquare&) const = default;
};

/// A finite double category given by dense tables: the object category,
/// the 1-cell skeleton, the square list, both compositions, and the frame
/// and unit tables. Self-contained; round-trips through JSON.
struct DoubleCatModel {
    FinCategory object_category;
    Id horizontal_name;
    std::vector<OneCell> onecells;
    std::map<Id, Id> identity1;  // zerocell -> identity 1-cell
    std::map<std::pair<Id, Id>, Id> comp1;
    std::vector<ModelSquare> squares;
    std::map<Id, Id> identity_square;  // 1-cell -> its identity square
    std::map<std::pair<Id, Id>, Id> vcomp;  // (second, first)
    std::map<std::pair<Id, Id>, Id> hcomp;  // (left, right)
    std::map<Id, Id> unit;  // object-category morphism -> square

    bool operator==(const DoubleCatModel&) const = default;

    [[nodiscard]] const ModelSquare* square(const Id& s) const;
};

/// The crossed product of a decorated 2-category by an indexing: squares,
/// sliding-orbit canonical forms, both compositions, and the assembled
/// model. Construction is eager; the result is immutable.
class CrossedProduct {
public:
    explicit CrossedProduct(Pi2Indexing phi);

    [[nodiscard]] const DoubleCatModel& model() const { return model_; }
    [[nodiscard]] const Pi2Indexing& indexing() const { return phi_; }

    /// Canonical representative of a square's sliding orbit. Framed
    /// squares with identity frames reduce to globular cells.
    [[nodiscard]] Square canonicalize(const Square& s) const;

    /// Vertical composite, `first` on top. Throws NotComposable.
    [[nodiscard]] Square vcomp_squares(const Square& second, const Square& first) const;

    /// Horizontal composite of frame-sharing squares. Throws FrameMismatch.
    [[nodiscard]] Square hcomp_squares(const Square& left, const Square& right) const;

    /// Unit square of an object-category morphism.
    [[nodiscard]] Square unit_square(const Id& f) const;

    /// True iff the squares lie in the same sliding orbit.
    [[nodiscard]] bool square_equal(const Square& s, const Square& t) const;

    /// Three-factor form (up, unit of the frame, down) for framed squares,
    /// the cell itself for globular ones, listed top to bottom.
    [[nodiscard]] std::vector<Square> canonical_decomposition(const Square& s) const;

    /// All single-step sliding variants of a framed square (both
    /// directions), not canonicalized.
    [[nodiscard]] std::vector<Square> sliding_variants(const Square& s) const;

private:
    [[nodiscard]] Square reduce(Id up, const Id& frame, Id down) const;
    [[nodiscard]] std::pair<Id, Id> boundary1(const Square& s) const;  // top, bottom 1-cells

    Pi2Indexing phi_;
    std::map<Id, Pi2Fiber> fibers_;
    // frame -> (up, down) -> canonical (up, down)
    std::map<Id, std::map<std::pair<Id, Id>, std::pair<Id, Id>>> canon_;
    DoubleCatModel model_;
};

[[nodiscard]] inline CrossedProduct build_crossprod(Pi2Indexing phi) {
    return CrossedProduct(std::move(phi));
}

/// Exhaustively verifies the double-category laws on a model: both
/// composition categories, frame functoriality, unit laws, horizontal
/// associativity and units, and interchange on all composable quadruples.
[[nodiscard]] ValidationReport check_double_axioms(const DoubleCatModel& m);

/// Rebuilds the decorated 2-category carried by a model: the object
/// category together with the 2-category of globular squares.
[[nodiscard]] DecoratedTwoCat decorated_horizontalization(const DoubleCatModel& m);

}  // namespace dct
