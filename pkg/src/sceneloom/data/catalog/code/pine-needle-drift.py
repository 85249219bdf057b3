"""Pine Needle Drift generator (Scattering)."""

PARAMS = {
    "size": 0.37,
    "detail": 5,
    "roughness": 0.504,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Needle Drift"
    for key, value in params.items():
        node[key] = value
    return node
