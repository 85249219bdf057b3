"""Bath Tub generator (Indoors)."""

PARAMS = {
    "size": 1.342,
    "detail": 4,
    "roughness": 0.055,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bath Tub"
    for key, value in params.items():
        node[key] = value
    return node
