# -*- coding: utf-8 -*-
DELIMITER = ","
JSON_FLOAT_FORMAT = "{:.17g}"
JSON_INDENT = 2
NEWICK_NEGATIVE_COMMENT = "[negative branch lengths present: dendrogram has inversions]"
FORMATS = ("points", "matrix")
