#pragma once

#include "smallgrp/catalog.hpp"
#include "smallgrp/degrees.hpp"
#include "smallgrp/error.hpp"
#include "smallgrp/group.hpp"
#include "smallgrp/io.hpp"
#include "smallgrp/isoclinism.hpp"
#include "smallgrp/isomorphism.hpp"
#include "smallgrp/rational.hpp"
#include "smallgrp/structure.hpp"
#include "smallgrp/verify.hpp"
