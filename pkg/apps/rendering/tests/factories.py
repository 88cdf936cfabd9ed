import factory

from apps.rendering.render import RenderSpec
from apps.tilings import TilingId


class RenderSpecFactory(factory.Factory):
    class Meta:
        model = RenderSpec

    tiling = TilingId.T4_8_8
    radius = 1
    highlight_walks = ()
    labels = ()
