"""Scikit-learn compatible sparse additive kernel regressor."""
# License: GNU AGPLv3

from numbers import Integral, Real

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_is_fitted

from ..exceptions import DimensionMismatchError
from ..kernels import SpectralKernel, make_sobolev_kernel
from ..rates import RegParams, make_reg_params
from ..utils.intervals import Interval
from ..utils.validation import check_responses, check_unit_interval, \
    validate_params
from .additive import SolverOptions, fit, predict


class SparseAdditiveRegressor(BaseEstimator, RegressorMixin):
    """Sparse additive regression with a doubly-penalized kernel
    estimator.

    Each component :math:`f_j` lives in the Hilbert space of a shared
    univariate kernel and is penalized both by its empirical norm
    :math:`\\|f_j\\|_n` and by its Hilbert norm :math:`\\|f_j\\|_{\\mathcal
    H}`. By default the two weights are the theory-driven values
    :math:`\\lambda_n = c\\gamma_n` and :math:`\\rho_n = c\\gamma_n^2` of
    :func:`~spamkern.rates.make_reg_params`.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel` or None, optional, \
        default: ``None``
        Univariate kernel. ``None`` means a Sobolev kernel with smoothness
        1.

    kappa : float, optional, default: ``1.``
        Scale constant of :math:`\\gamma_n`.

    c_mult : float, optional, default: ``16.``
        Penalty multiplier, at least 16.

    constant : float, optional, default: ``40.``
        Constant of the critical inequality defining :math:`\\nu_n`.

    lambda_n : float or None, optional, default: ``None``
        Explicit empirical-norm weight overriding the theory-driven value.

    rho_n : float or None, optional, default: ``None``
        Explicit Hilbert-norm weight overriding the theory-driven value.

    max_sweeps : int, optional, default: ``10000``
        Sweep budget of the solver.

    kkt_tol : float, optional, default: ``1e-6``
        KKT tolerance of the solver.

    objective_tol : float, optional, default: ``1e-12``
        Relative stall tolerance of the solver.

    Attributes
    ----------
    kernel_ : :class:`~spamkern.kernels.SpectralKernel`
        Kernel used for fitting.

    reg_params_ : :class:`~spamkern.rates.RegParams`
        Regularization parameters used for fitting.

    fit_ : :class:`~spamkern.estimator.AdditiveFit`
        Fitted model.

    X_fit_ : ndarray of shape (n_samples, n_coordinates)
        Training design, needed to evaluate the representer expansion.

    Examples
    --------
    >>> import numpy as np
    >>> from spamkern.kernels import make_finite_rank_kernel
    >>> from spamkern.estimator import SparseAdditiveRegressor
    >>> rng = np.random.default_rng(0)
    >>> X = rng.uniform(size=(200, 4))
    >>> y = np.sqrt(2) * np.cos(2 * np.pi * X[:, 0])
    >>> model = SparseAdditiveRegressor(make_finite_rank_kernel(2)).fit(X, y)
    >>> model.fit_.active_set
    (0,)

    See also
    --------
    spamkern.estimator.fit, spamkern.rates.make_reg_params

    """

    _hyperparameters = {
        'kernel': {'type': (SpectralKernel, type(None))},
        'kappa': {'type': Real, 'in': Interval(0, np.inf, closed='neither')},
        'c_mult': {'type': Real, 'in': Interval(16, np.inf, closed='left')},
        'constant': {'type': Real,
                     'in': Interval(0, np.inf, closed='neither')},
        'lambda_n': {'type': (Real, type(None)),
                     'in': Interval(0, np.inf, closed='left')},
        'rho_n': {'type': (Real, type(None)),
                  'in': Interval(0, np.inf, closed='left')},
        'max_sweeps': {'type': Integral,
                       'in': Interval(1, np.inf, closed='left')},
        'kkt_tol': {'type': Real, 'in': Interval(0, np.inf, closed='neither')},
        'objective_tol': {'type': Real,
                          'in': Interval(0, np.inf, closed='neither')}
        }

    def __init__(self, kernel=None, kappa=1., c_mult=16., constant=40.,
                 lambda_n=None, rho_n=None, max_sweeps=10000, kkt_tol=1e-6,
                 objective_tol=1e-12):
        self.kernel = kernel
        self.kappa = kappa
        self.c_mult = c_mult
        self.constant = constant
        self.lambda_n = lambda_n
        self.rho_n = rho_n
        self.max_sweeps = max_sweeps
        self.kkt_tol = kkt_tol
        self.objective_tol = objective_tol

    def fit(self, X, y):
        """Fit the estimator on the design `X` and responses `y`.

        Parameters
        ----------
        X : ndarray of shape (n_samples, n_coordinates)
            Covariates in :math:`[0, 1]`, with at least 2 coordinates unless
            both `lambda_n` and `rho_n` are given.

        y : ndarray of shape (n_samples,)
            Responses.

        Returns
        -------
        self : object

        """
        validate_params(self.get_params(), self._hyperparameters)
        X = check_unit_interval(X)
        y = check_responses(y, n_samples=X.shape[0])
        n, d = X.shape

        self.kernel_ = self.kernel if self.kernel is not None \
            else make_sobolev_kernel(1)
        if self.lambda_n is None or self.rho_n is None:
            params = make_reg_params(self.kernel_, n, d, kappa=self.kappa,
                                     c_mult=self.c_mult,
                                     constant=self.constant)
        else:
            params = RegParams(nu_n=np.nan, gamma_n=np.nan, lambda_n=np.nan,
                               rho_n=np.nan, kappa=float(self.kappa),
                               c_mult=float(self.c_mult))
        if self.lambda_n is not None:
            params = params._replace(lambda_n=float(self.lambda_n))
        if self.rho_n is not None:
            params = params._replace(rho_n=float(self.rho_n))
        self.reg_params_ = params
        options = SolverOptions(max_sweeps=self.max_sweeps,
                                kkt_tol=self.kkt_tol,
                                objective_tol=self.objective_tol)
        self.fit_ = fit(X, y, self.kernel_, params, options)
        self.X_fit_ = X
        return self

    def predict(self, X):
        """Predict responses at the points `X`.

        Parameters
        ----------
        X : ndarray of shape (n_points, n_coordinates)
            Points in :math:`[0, 1]`.

        Returns
        -------
        y_pred : ndarray of shape (n_points,)

        """
        check_is_fitted(self, ['fit_', 'X_fit_'])
        X = check_unit_interval(X)
        if X.shape[1] != self.X_fit_.shape[1]:
            raise DimensionMismatchError(
                f"`X` has {X.shape[1]} coordinates while the estimator was "
                f"fitted on {self.X_fit_.shape[1]}.")
        return predict(self.fit_, self.kernel_, self.X_fit_, X)
