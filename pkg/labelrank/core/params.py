"""Parameters of the LabelRank dynamics"""
import io

import yaml
from easydev import DevTools

__all__ = ["Params"]

devtools = DevTools()


class Params(object):
    """Parameters of a LabelRank run

    ==================== ======= ==================================================
    attribute            default meaning
    ==================== ======= ==================================================
    inflation            2.0     exponent of the inflation operator (>= 1)
    cutoff               0.1     labels below this probability are dropped
    update_fraction      0.6     q of the conditional update, in [0, 1]
    stop_frequency       5       repetitions of a numChange value that stop a run
    max_iterations       1000    safety cap on the number of iterations
    tie_tolerance        1e-9    probabilities this close to the maximum tie
    conditional_update   True    False runs propagation, inflation and cutoff only
    ==================== ======= ==================================================

    Values are validated when set::

        >>> p = Params(inflation=1.5, update_fraction=0.5)
        >>> p.inflation = 0.5
        Traceback (most recent call last):
        ...
        ValueError: ...

    Parameters can also be read from a YAML file with :meth:`from_yaml`::

        inflation: 2
        update_fraction: 0.7

    """
    _fields = ["inflation", "cutoff", "update_fraction", "stop_frequency",
               "max_iterations", "tie_tolerance", "conditional_update"]

    def __init__(self, inflation=2.0, cutoff=0.1, update_fraction=0.6,
            stop_frequency=5, max_iterations=1000, tie_tolerance=1e-9,
            conditional_update=True):
        self.inflation = inflation
        self.cutoff = cutoff
        self.update_fraction = update_fraction
        self.stop_frequency = stop_frequency
        self.max_iterations = max_iterations
        self.tie_tolerance = tie_tolerance
        self.conditional_update = conditional_update

    def _get_inflation(self):
        return self._inflation
    def _set_inflation(self, value):
        value = float(value)
        devtools.check_range(value, 1, float("inf"))
        self._inflation = value
    inflation = property(_get_inflation, _set_inflation,
        doc="exponent of the inflation operator (in >= 1)")

    def _get_cutoff(self):
        return self._cutoff
    def _set_cutoff(self, value):
        value = float(value)
        devtools.check_range(value, 0, 1)
        self._cutoff = value
    cutoff = property(_get_cutoff, _set_cutoff, doc="cutoff threshold r in [0, 1]")

    def _get_update_fraction(self):
        return self._update_fraction
    def _set_update_fraction(self, value):
        value = float(value)
        devtools.check_range(value, 0, 1)
        self._update_fraction = value
    update_fraction = property(_get_update_fraction, _set_update_fraction,
        doc="conditional update fraction q in [0, 1]")

    def _positive_integer(self, name, value):
        if isinstance(value, bool) or int(value) != value:
            raise ValueError("%s must be an integer. Provided %s" % (name, value))
        value = int(value)
        devtools.check_range(value, 1, float("inf"))
        return value

    def _get_stop_frequency(self):
        return self._stop_frequency
    def _set_stop_frequency(self, value):
        self._stop_frequency = self._positive_integer("stop_frequency", value)
    stop_frequency = property(_get_stop_frequency, _set_stop_frequency)

    def _get_max_iterations(self):
        return self._max_iterations
    def _set_max_iterations(self, value):
        self._max_iterations = self._positive_integer("max_iterations", value)
    max_iterations = property(_get_max_iterations, _set_max_iterations)

    def _get_tie_tolerance(self):
        return self._tie_tolerance
    def _set_tie_tolerance(self, value):
        value = float(value)
        devtools.check_range(value, 0, 1)
        self._tie_tolerance = value
    tie_tolerance = property(_get_tie_tolerance, _set_tie_tolerance)

    def _get_conditional_update(self):
        return self._conditional_update
    def _set_conditional_update(self, value):
        devtools.check_param_in_list(value, [True, False])
        self._conditional_update = bool(value)
    conditional_update = property(_get_conditional_update, _set_conditional_update)

    @classmethod
    def from_dict(cls, data):
        """Create parameters from a dictionary; unknown keys raise ValueError"""
        data = dict(data or {})
        unknown = [k for k in data if k not in cls._fields]
        if unknown:
            raise ValueError("unknown parameters %s. Valid names are %s" % (unknown,
                cls._fields))
        return cls(**data)

    @classmethod
    def from_yaml(cls, filename):
        """Read parameters from a YAML file (a mapping of attribute names)"""
        with io.open(filename, "r", encoding="utf-8") as fin:
            data = yaml.safe_load(fin)
        if data is not None and not isinstance(data, dict):
            raise ValueError("%s must contain a mapping of parameters" % filename)
        return cls.from_dict(data)

    def as_dict(self):
        return dict((k, getattr(self, k)) for k in self._fields)

    def copy(self, **kargs):
        """Return a copy with some attributes replaced"""
        data = self.as_dict()
        data.update(kargs)
        return Params(**data)

    def __eq__(self, other):
        if not isinstance(other, Params):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def __repr__(self):
        return "Params(%s)" % ", ".join("%s=%s" % (k, v) for k, v in
            self.as_dict().items())
