"""Desert Shrub generator (Plants)."""

PARAMS = {
    "size": 0.278,
    "detail": 3,
    "roughness": 0.387,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Shrub"
    for key, value in params.items():
        node[key] = value
    return node
