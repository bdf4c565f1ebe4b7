#pragma once

#include "posbraid/braid.hpp"
#include "posbraid/corpus.hpp"
#include "posbraid/diagram.hpp"
#include "posbraid/errors.hpp"
#include "posbraid/fuzz.hpp"
#include "posbraid/goeritz.hpp"
#include "posbraid/matrix.hpp"
#include "posbraid/polynomial.hpp"
#include "posbraid/proofpipe.hpp"
#include "posbraid/rational.hpp"
#include "posbraid/seifert.hpp"
#include "posbraid/sigcore.hpp"
#include "posbraid/signature.hpp"
