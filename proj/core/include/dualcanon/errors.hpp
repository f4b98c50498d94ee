#pragma once

#include <stdexcept>
#include <string>

namespace dualcanon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvertible : Error {
  NotInvertible() : Error("element or matrix is not invertible") {}
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  DimensionMismatch() : Error("matrix dimensions do not match") {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
  IndexOutOfRange() : Error("index out of range") {}
};

struct IrrationalSpectrum : Error {
  IrrationalSpectrum()
      : Error("characteristic polynomial has non-rational roots") {}
};

struct NotCoprime : Error {
  NotCoprime() : Error("classical factors are not coprime") {}
};

struct ZeroMatrix : Error {
  ZeroMatrix() : Error("matrix is zero") {}
};

struct NotDiagonal : Error {
  NotDiagonal() : Error("matrix is not diagonal") {}
};

struct NotNilpotent : Error {
  NotNilpotent() : Error("matrix is not nilpotent") {}
};

struct NotMuMutual : Error {
  NotMuMutual() : Error("pair is not mu-mutual") {}
};

struct NotInUm : Error {
  NotInUm() : Error("matrix is not in U_m") {}
};

struct WrongShape : Error {
  WrongShape() : Error("matrix does not have the required shape") {}
  explicit WrongShape(const std::string& what) : Error(what) {}
};

struct UnsupportedOrder : Error {
  UnsupportedOrder() : Error("order not supported by this operation") {}
};

struct UnsupportedCardinality : Error {
  UnsupportedCardinality() : Error("index set cardinality not supported") {}
};

struct SpectraNotDisjoint : Error {
  SpectraNotDisjoint() : Error("coefficient spectra are not disjoint") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace dualcanon
