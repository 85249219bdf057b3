"""Candle Holder generator (Indoors)."""

PARAMS = {
    "size": 0.206,
    "detail": 5,
    "roughness": 0.156,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Candle Holder"
    for key, value in params.items():
        node[key] = value
    return node
