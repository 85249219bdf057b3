"""Pine Bark 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.897,
    "detail": 5,
    "roughness": 0.455,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
