"""
Surface regressor, online training and navigability cost.
"""
from .features import FeatureVector, extract_batch, extract_features
from .interface import SurfaceRegressor
from .implementation import TwoStreamRegressor
from .cost import CostConfig, CostModel, fit_cost_model, navigability_cost, raw_cost
from .training import OnlineTrainer, TrainingConfig, TrainingReport, train_on_features, train_online
from .storage import load_model, save_model
from .factory import RegressorFactory
