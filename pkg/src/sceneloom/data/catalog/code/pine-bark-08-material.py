"""Pine Bark 08 Material generator (Materials)."""

PARAMS = {
    "size": 1.887,
    "detail": 1,
    "roughness": 0.755,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
