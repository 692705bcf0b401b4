from .ba import gen_ba
from .planted import gen_planted, planted_params
