#ifndef TLAB_HPP
#define TLAB_HPP

#include "tlab/bounds.hpp"
#include "tlab/cliques.hpp"
#include "tlab/conjecture.hpp"
#include "tlab/corpus.hpp"
#include "tlab/errors.hpp"
#include "tlab/generators.hpp"
#include "tlab/graph.hpp"
#include "tlab/graph_io.hpp"
#include "tlab/independence.hpp"
#include "tlab/inequality.hpp"
#include "tlab/proof_structure.hpp"
#include "tlab/rational.hpp"
#include "tlab/record.hpp"
#include "tlab/simplex.hpp"
#include "tlab/stability.hpp"
#include "tlab/sweep.hpp"
#include "tlab/vertex_set.hpp"
#include "tlab/weights.hpp"

#endif // TLAB_HPP
