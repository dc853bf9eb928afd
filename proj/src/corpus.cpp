#include "chigen/corpus.hpp"

namespace chigen {

const std::vector<std::string>& corpus_specs() {
  // Families: cyclic, abelian products, dihedral, symmetric/alternating,
  // semidirect, and mixed products. Elementary abelian 2-groups stop at
  // rank 5; ranks 6 and 7 are exercised by the exhaustive abelian sweep,
  // which does not pay for the per-quotient passes the corpus runs.
  static const std::vector<std::string> specs = {
      // cyclic
      "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11",
      "Z12", "Z15", "Z16", "Z18", "Z20", "Z24", "Z27", "Z30", "Z32", "Z36",
      "Z48", "Z60", "Z64", "Z100", "Z105", "Z128", "Z210", "Z360",
      // abelian, non-cyclic
      "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z2xZ6", "Z3xZ3", "Z2xZ8", "Z4xZ4",
      "Z2xZ2xZ4", "Z2xZ2xZ2xZ2", "Z3xZ9", "Z3xZ3xZ3", "Z2xZ10", "Z5xZ5",
      "Z2xZ12", "Z4xZ6", "Z2xZ2xZ6", "Z6xZ6", "Z2xZ16", "Z4xZ8", "Z7xZ7",
      "Z2xZ18", "Z3xZ12", "Z2xZ2xZ2xZ2xZ2", "Z2xZ4xZ8", "Z6xZ12", "Z5xZ10",
      "Z8xZ8", "Z9xZ9", "Z10xZ10", "Z11xZ11", "Z2xZ30", "Z2xZ64", "Z12xZ12",
      // dihedral (order 2n)
      "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D12", "D14",
      "D15", "D16", "D18", "D20", "D24", "D25", "D27", "D30",
      // symmetric and alternating
      "S3", "S4", "S5", "A4", "A5",
      // semidirect Z_m x| Z_n
      "SD(3,2,2)", "SD(3,4,2)", "SD(5,4,2)", "SD(5,4,3)", "SD(7,3,2)",
      "SD(7,3,4)", "SD(7,6,3)", "SD(7,4,6)", "SD(9,3,4)", "SD(9,6,2)",
      "SD(8,2,3)", "SD(8,2,5)", "SD(8,2,7)", "SD(16,2,7)", "SD(16,2,9)",
      "SD(16,2,15)", "SD(5,8,2)", "SD(15,2,4)", "SD(15,4,2)", "SD(21,6,2)",
      "SD(25,4,7)", "SD(13,3,3)", "SD(13,4,5)", "SD(11,5,3)", "SD(27,3,10)",
      "SD(32,2,15)", "SD(23,11,2)",
      // mixed products
      "Z2xS3", "Z3xS3", "Z4xS3", "Z5xS3", "Z7xS3", "Z2xZ2xS3", "S3xS3",
      "Z2xD4", "Z3xD4", "Z4xD4", "Z2xD5", "Z3xD5", "Z5xD5", "Z2xD9",
      "Z2xA4", "Z3xA4", "Z5xA4", "A4xS3", "A4xA4", "Z2xS4", "Z3xS4",
      "Z2xA5", "Z3xA5",
  };
  return specs;
}

}  // namespace chigen
