# -*- coding: utf-8 -*-
class BaseException(Exception):
    """Base exception class."""


class MethodError(BaseException):
    """Linkage method cannot be used as requested."""


class InvalidMethod(MethodError):
    """Method string does not parse."""


class CoordinatesRequired(MethodError):
    """Linkage is defined on point coordinates, a distance matrix is not enough."""


class MergeHistoryRequired(MethodError):
    """Linkage is defined recursively on the merge history of the clusters."""


class UnsupportedStrategy(MethodError):
    """Evaluation strategy is not available for this method."""


class ClusterError(BaseException):
    """Invalid cluster arguments."""


class EmptyCluster(ClusterError):
    """Cluster has no members."""


class IndexOutOfRange(ClusterError):
    """Member index is not an object of the distance matrix."""


class OverlappingClusters(ClusterError):
    """Clusters share members."""


class InvalidClusterCount(ClusterError):
    """Requested number of clusters is outside 1..n."""


class TooFewObjects(ClusterError):
    """Clustering needs at least two objects."""


class InvalidBound(BaseException):
    """Search or check bound is too small."""


class InvariantBreach(BaseException):
    """Internal consistency check failed."""


class UnsupportedOrientation(MethodError):
    """Coefficient conditions are stated for largest-first operators only."""
